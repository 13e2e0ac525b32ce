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
#ifndef BUNDLEOPT_TOOLS_BENCH_CLI_JSON_READER_H_
#define BUNDLEOPT_TOOLS_BENCH_CLI_JSON_READER_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace bundleopt::cli {

using Json = nlohmann::ordered_json;

// Parses a config file. Syntax errors become ConfigError carrying the
// line and column reported by the parser.
Json LoadJsonFile(const std::filesystem::path& path);

// Strict view of one JSON object. Every accessor records the key it read;
// Finish() rejects whatever was not read, so typos surface as errors
// instead of silently falling back to defaults. Error messages name the
// full dotted path of the offending field.
class ObjectReader {
 public:
  ObjectReader(const Json& json, std::string path);

  bool Has(const std::string& key) const;

  double Number(const std::string& key);
  double Number(const std::string& key, double fallback);
  double Positive(const std::string& key);
  double Positive(const std::string& key, double fallback);
  double NonNegative(const std::string& key, double fallback);
  int Integer(const std::string& key, int min_value);
  int Integer(const std::string& key, int min_value, int fallback);
  std::uint64_t Seed(const std::string& key, std::uint64_t fallback);
  bool Boolean(const std::string& key, bool fallback);
  std::string String(const std::string& key);
  std::string String(const std::string& key, const std::string& fallback);
  std::vector<std::string> StringList(const std::string& key);

  // A number broadcast to `size`, or a list of exactly `size` numbers.
  Eigen::VectorXd Vector(const std::string& key, int size);
  std::optional<Eigen::VectorXd> OptionalVector(const std::string& key,
                                                int size);
  // Dense list of lists with any shape.
  Eigen::MatrixXd Matrix(const std::string& key);
  // size x size matrix given as a scalar (times identity), a diagonal list
  // or a full list of lists.
  Eigen::MatrixXd SquareMatrix(const std::string& key, int size);

  ObjectReader Child(const std::string& key);
  std::optional<ObjectReader> OptionalChild(const std::string& key);

  const std::string& path() const { return path_; }
  [[noreturn]] void Fail(const std::string& key,
                         const std::string& message) const;

  // Throws ConfigError naming the first key that was never read.
  void Finish() const;

 private:
  const Json& Field(const std::string& key);
  std::string FieldPath(const std::string& key) const;

  const Json& json_;
  std::string path_;
  std::set<std::string> seen_;
};

}  // namespace bundleopt::cli

#endif  // BUNDLEOPT_TOOLS_BENCH_CLI_JSON_READER_H_
