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
#ifndef BUNDLEOPT_SYSTEMS_LINEAR_SYSTEM_H_
#define BUNDLEOPT_SYSTEMS_LINEAR_SYSTEM_H_

#include "bundleopt/systems/dynamical_system.h"

namespace bundleopt::systems {

// x_{t+1} = A x_t + B u_t + c.
class LinearSystem final : public DynamicalSystem {
 public:
  LinearSystem(MatrixXd A, MatrixXd B);
  LinearSystem(MatrixXd A, MatrixXd B, VectorXd c);

  int state_dim() const override { return static_cast<int>(A_.rows()); }
  int input_dim() const override { return static_cast<int>(B_.cols()); }
  std::string name() const override { return "linear"; }

  VectorXd Step(const VectorXd& x, const VectorXd& u) const override;
  bool HasAnalyticJacobians() const override { return true; }
  StepJacobians Jacobians(const VectorXd& x, const VectorXd& u) const override;

  const MatrixXd& A() const { return A_; }
  const MatrixXd& B() const { return B_; }
  const VectorXd& c() const { return c_; }

 private:
  MatrixXd A_;
  MatrixXd B_;
  VectorXd c_;
};

}  // namespace bundleopt::systems

#endif  // BUNDLEOPT_SYSTEMS_LINEAR_SYSTEM_H_
