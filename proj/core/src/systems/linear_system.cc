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
#include "bundleopt/systems/linear_system.h"

#include "bundleopt/common/error.h"

namespace bundleopt::systems {

LinearSystem::LinearSystem(MatrixXd A, MatrixXd B)
    : LinearSystem(A, B, VectorXd::Zero(A.rows())) {}

LinearSystem::LinearSystem(MatrixXd A, MatrixXd B, VectorXd c)
    : A_(std::move(A)), B_(std::move(B)), c_(std::move(c)) {
  if (A_.rows() != A_.cols() || B_.rows() != A_.rows() ||
      c_.size() != A_.rows() || A_.rows() == 0 || B_.cols() == 0) {
    throw ConfigError("LinearSystem: inconsistent A/B/c dimensions");
  }
}

VectorXd LinearSystem::Step(const VectorXd& x, const VectorXd& u) const {
  CheckDimensions(x, u);
  return A_ * x + B_ * u + c_;
}

StepJacobians LinearSystem::Jacobians(const VectorXd& x,
                                      const VectorXd& u) const {
  CheckDimensions(x, u);
  return {A_, B_};
}

}  // namespace bundleopt::systems
