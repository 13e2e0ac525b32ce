// Copyright 2026 The bundleopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "bench_cli/output.h"

#include <fmt/format.h>

#include "bundleopt/common/error.h"

#ifndef BUNDLEOPT_VERSION
#define BUNDLEOPT_VERSION "unknown"
#endif

namespace bundleopt::cli {

std::string FormatNumber(double v) { return fmt::format("{}", v); }

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& columns)
    : path_(path), out_(path, std::ios::binary), columns_(columns.size()) {
  if (!out_) throw Error("cannot write " + path.string());
  out_ << "# " << kCsvSchema << "\n";
  Row(columns);
}

void CsvWriter::Row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) {
    throw Error("CsvWriter: row width differs from header in " +
                path_.string());
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  if (!out_) throw Error("write failed for " + path_.string());
}

void WriteManifest(const std::filesystem::path& out_dir,
                   const Manifest& manifest) {
  Json j;
  j["tool"] = "bundleopt";
  j["version"] = BUNDLEOPT_VERSION;
  j["command"] = manifest.command;
  j["csv_schema"] = kCsvSchema;
  j["seeds"] = manifest.seeds;
  j["outputs"] = manifest.outputs;
  j["config"] = manifest.config;
  const std::filesystem::path path = out_dir / "manifest.json";
  std::ofstream out(path, std::ios::binary);
  out << j.dump(2) << '\n';
  if (!out) throw Error("cannot write " + path.string());
}

}  // namespace bundleopt::cli
