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
#ifndef BUNDLEOPT_COMMON_LINALG_H_
#define BUNDLEOPT_COMMON_LINALG_H_

#include <string_view>

#include <Eigen/Dense>

namespace bundleopt {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Throws ConfigError unless m is square and symmetric to a relative 1e-9.
void CheckSymmetric(const MatrixXd& m, std::string_view name);

// Throws ConfigError unless m is symmetric with eigenvalues >= -tol*scale.
void CheckPositiveSemidefinite(const MatrixXd& m, std::string_view name);

// Throws ConfigError unless m is symmetric with eigenvalues > min_eigenvalue.
void CheckPositiveDefinite(const MatrixXd& m, std::string_view name,
                           double min_eigenvalue = 1e-9);

// Smallest eigenvalue of the symmetric part of m.
double MinEigenvalue(const MatrixXd& m);

}  // namespace bundleopt

#endif  // BUNDLEOPT_COMMON_LINALG_H_
