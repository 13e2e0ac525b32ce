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
#ifndef BUNDLEOPT_SYSTEMS_DUBINS_CAR_H_
#define BUNDLEOPT_SYSTEMS_DUBINS_CAR_H_

#include "bundleopt/systems/dynamical_system.h"

namespace bundleopt::systems {

// Kinematic car, state (px, py, heading), input (speed, turn rate), explicit
// Euler with timestep h.
class DubinsCar final : public DynamicalSystem {
 public:
  explicit DubinsCar(double timestep = 0.1);

  int state_dim() const override { return 3; }
  int input_dim() const override { return 2; }
  std::string name() const override { return "dubins"; }

  VectorXd Step(const VectorXd& x, const VectorXd& u) const override;
  bool HasAnalyticJacobians() const override { return true; }
  StepJacobians Jacobians(const VectorXd& x, const VectorXd& u) const override;

  double timestep() const { return timestep_; }

 private:
  double timestep_;
};

}  // namespace bundleopt::systems

#endif  // BUNDLEOPT_SYSTEMS_DUBINS_CAR_H_
