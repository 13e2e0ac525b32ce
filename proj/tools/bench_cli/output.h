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
#ifndef BUNDLEOPT_TOOLS_BENCH_CLI_OUTPUT_H_
#define BUNDLEOPT_TOOLS_BENCH_CLI_OUTPUT_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "bench_cli/json_reader.h"

namespace bundleopt::cli {

inline constexpr char kCsvSchema[] = "bundleopt-csv v1";

// Shortest decimal form that round-trips, so identical doubles always print
// identically.
std::string FormatNumber(double v);

// Long-format CSV with a schema comment line ahead of the header row.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path,
            const std::vector<std::string>& columns);

  void Row(const std::vector<std::string>& cells);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  size_t columns_;
};

struct Manifest {
  std::string command;
  Json config;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> outputs;
};

// Writes manifest.json. Deliberately free of timestamps, host names and
// thread counts so reruns compare byte for byte.
void WriteManifest(const std::filesystem::path& out_dir,
                   const Manifest& manifest);

}  // namespace bundleopt::cli

#endif  // BUNDLEOPT_TOOLS_BENCH_CLI_OUTPUT_H_
