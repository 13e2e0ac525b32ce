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
#include "bundleopt/systems/dubins_car.h"

#include <cmath>

#include "bundleopt/common/error.h"

namespace bundleopt::systems {

DubinsCar::DubinsCar(double timestep) : timestep_(timestep) {
  if (!(timestep_ > 0)) throw ConfigError("DubinsCar: timestep must be > 0");
}

VectorXd DubinsCar::Step(const VectorXd& x, const VectorXd& u) const {
  CheckDimensions(x, u);
  const double h = timestep_;
  VectorXd next(3);
  next[0] = x[0] + h * u[0] * std::cos(x[2]);
  next[1] = x[1] + h * u[0] * std::sin(x[2]);
  next[2] = x[2] + h * u[1];
  return next;
}

StepJacobians DubinsCar::Jacobians(const VectorXd& x,
                                   const VectorXd& u) const {
  CheckDimensions(x, u);
  const double h = timestep_;
  const double c = std::cos(x[2]);
  const double s = std::sin(x[2]);
  StepJacobians jac{MatrixXd::Identity(3, 3), MatrixXd::Zero(3, 2)};
  jac.A(0, 2) = -h * u[0] * s;
  jac.A(1, 2) = h * u[0] * c;
  jac.B(0, 0) = h * c;
  jac.B(1, 0) = h * s;
  jac.B(2, 1) = h;
  return jac;
}

}  // namespace bundleopt::systems
