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
#include "bench_cli/json_reader.h"

#include <cmath>
#include <fstream>
#include <limits>

#include "bundleopt/common/error.h"

namespace bundleopt::cli {

Json LoadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    // The parser message already carries "at line L, column C".
    throw ConfigError(path.string() + ": " + e.what());
  }
}

ObjectReader::ObjectReader(const Json& json, std::string path)
    : json_(json), path_(std::move(path)) {
  if (!json_.is_object()) {
    throw ConfigError("config field '" + path_ + "': expected an object");
  }
}

bool ObjectReader::Has(const std::string& key) const {
  return json_.contains(key);
}

std::string ObjectReader::FieldPath(const std::string& key) const {
  return path_.empty() ? key : path_ + "." + key;
}

void ObjectReader::Fail(const std::string& key,
                        const std::string& message) const {
  throw ConfigError("config field '" + FieldPath(key) + "': " + message);
}

const Json& ObjectReader::Field(const std::string& key) {
  seen_.insert(key);
  auto it = json_.find(key);
  if (it == json_.end()) Fail(key, "missing required field");
  return *it;
}

namespace {

double AsFinite(const Json& j, const ObjectReader& r, const std::string& key) {
  if (!j.is_number()) r.Fail(key, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) r.Fail(key, "expected a finite number");
  return v;
}

}  // namespace

double ObjectReader::Number(const std::string& key) {
  return AsFinite(Field(key), *this, key);
}

double ObjectReader::Number(const std::string& key, double fallback) {
  return Has(key) ? Number(key) : (seen_.insert(key), fallback);
}

double ObjectReader::Positive(const std::string& key) {
  const double v = Number(key);
  if (!(v > 0.0)) Fail(key, "must be positive");
  return v;
}

double ObjectReader::Positive(const std::string& key, double fallback) {
  return Has(key) ? Positive(key) : (seen_.insert(key), fallback);
}

double ObjectReader::NonNegative(const std::string& key, double fallback) {
  const double v = Number(key, fallback);
  if (v < 0.0) Fail(key, "must be non-negative");
  return v;
}

int ObjectReader::Integer(const std::string& key, int min_value) {
  const Json& j = Field(key);
  if (!j.is_number_integer()) Fail(key, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < min_value || v > std::numeric_limits<int>::max()) {
    Fail(key, "must be an integer >= " + std::to_string(min_value));
  }
  return static_cast<int>(v);
}

int ObjectReader::Integer(const std::string& key, int min_value,
                          int fallback) {
  return Has(key) ? Integer(key, min_value) : (seen_.insert(key), fallback);
}

std::uint64_t ObjectReader::Seed(const std::string& key,
                                 std::uint64_t fallback) {
  if (!Has(key)) {
    seen_.insert(key);
    return fallback;
  }
  const Json& j = Field(key);
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  Fail(key, "expected a non-negative integer");
}

bool ObjectReader::Boolean(const std::string& key, bool fallback) {
  if (!Has(key)) {
    seen_.insert(key);
    return fallback;
  }
  const Json& j = Field(key);
  if (!j.is_boolean()) Fail(key, "expected true or false");
  return j.get<bool>();
}

std::string ObjectReader::String(const std::string& key) {
  const Json& j = Field(key);
  if (!j.is_string()) Fail(key, "expected a string");
  return j.get<std::string>();
}

std::string ObjectReader::String(const std::string& key,
                                 const std::string& fallback) {
  return Has(key) ? String(key) : (seen_.insert(key), fallback);
}

std::vector<std::string> ObjectReader::StringList(const std::string& key) {
  const Json& j = Field(key);
  if (!j.is_array() || j.empty()) Fail(key, "expected a non-empty list");
  std::vector<std::string> out;
  for (const Json& item : j) {
    if (!item.is_string()) Fail(key, "expected a list of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Eigen::VectorXd ObjectReader::Vector(const std::string& key, int size) {
  const Json& j = Field(key);
  if (j.is_number()) {
    return Eigen::VectorXd::Constant(size, AsFinite(j, *this, key));
  }
  if (!j.is_array() || static_cast<int>(j.size()) != size) {
    Fail(key, "expected a number or a list of " + std::to_string(size) +
                  " numbers");
  }
  Eigen::VectorXd v(size);
  for (int i = 0; i < size; ++i) v[i] = AsFinite(j[i], *this, key);
  return v;
}

std::optional<Eigen::VectorXd> ObjectReader::OptionalVector(
    const std::string& key, int size) {
  if (!Has(key)) {
    seen_.insert(key);
    return std::nullopt;
  }
  return Vector(key, size);
}

Eigen::MatrixXd ObjectReader::Matrix(const std::string& key) {
  const Json& j = Field(key);
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    Fail(key, "expected a non-empty list of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols) {
      Fail(key, "rows must all have " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = AsFinite(j[r][c], *this, key);
    }
  }
  return m;
}

Eigen::MatrixXd ObjectReader::SquareMatrix(const std::string& key, int size) {
  const Json& j = Field(key);
  if (j.is_array() && !j.empty() && j[0].is_array()) {
    Eigen::MatrixXd m = Matrix(key);
    if (m.rows() != size || m.cols() != size) {
      Fail(key, "expected a " + std::to_string(size) + "x" +
                    std::to_string(size) + " matrix");
    }
    return m;
  }
  return Vector(key, size).asDiagonal();
}

ObjectReader ObjectReader::Child(const std::string& key) {
  const Json& j = Field(key);
  return ObjectReader(j, FieldPath(key));
}

std::optional<ObjectReader> ObjectReader::OptionalChild(
    const std::string& key) {
  if (!Has(key)) {
    seen_.insert(key);
    return std::nullopt;
  }
  return Child(key);
}

void ObjectReader::Finish() const {
  for (auto it = json_.begin(); it != json_.end(); ++it) {
    if (!seen_.contains(it.key())) {
      throw ConfigError("config field '" + FieldPath(it.key()) +
                        "': unknown key");
    }
  }
}

}  // namespace bundleopt::cli
