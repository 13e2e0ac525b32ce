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
#ifndef BUNDLEOPT_COMMON_ERROR_H_
#define BUNDLEOPT_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace bundleopt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters, dimensions or preconditions supplied by the caller.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Requested operation is outside the supported domain (e.g. quadrature in
// more than three dimensions).
class UnsupportedError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Failure of a numerical procedure on otherwise valid input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// The least-squares design matrix of a zero-order estimator does not have
// full column rank on the perturbed subspace.
class SingularRegressionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A simulation or optimization left its stable regime.
class DivergedError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace bundleopt

#endif  // BUNDLEOPT_COMMON_ERROR_H_
