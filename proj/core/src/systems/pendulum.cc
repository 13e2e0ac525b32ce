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
#include "bundleopt/systems/pendulum.h"

#include <cmath>

#include "bundleopt/common/error.h"

namespace bundleopt::systems {

Pendulum::Pendulum(PendulumParams params) : params_(params) {
  if (!(params_.mass > 0 && params_.length > 0 && params_.timestep > 0 &&
        params_.gravity >= 0 && params_.damping >= 0)) {
    throw ConfigError("Pendulum: mass, length, timestep must be positive");
  }
}

VectorXd Pendulum::Step(const VectorXd& x, const VectorXd& u) const {
  CheckDimensions(x, u);
  const auto& p = params_;
  const double inertia = p.mass * p.length * p.length;
  const double accel = (u[0] - p.damping * x[1] -
                        p.mass * p.gravity * p.length * std::sin(x[0])) /
                       inertia;
  VectorXd next(2);
  next[1] = x[1] + p.timestep * accel;
  next[0] = x[0] + p.timestep * next[1];
  return next;
}

StepJacobians Pendulum::Jacobians(const VectorXd& x, const VectorXd& u) const {
  CheckDimensions(x, u);
  const auto& p = params_;
  const double h = p.timestep;
  const double inertia = p.mass * p.length * p.length;
  const double da_dtheta = -p.gravity / p.length * std::cos(x[0]);
  const double da_domega = -p.damping / inertia;
  const double da_du = 1.0 / inertia;

  StepJacobians jac{MatrixXd(2, 2), MatrixXd(2, 1)};
  // Velocity row first; the position row reuses it.
  jac.A(1, 0) = h * da_dtheta;
  jac.A(1, 1) = 1.0 + h * da_domega;
  jac.A(0, 0) = 1.0 + h * jac.A(1, 0);
  jac.A(0, 1) = h * jac.A(1, 1);
  jac.B(1, 0) = h * da_du;
  jac.B(0, 0) = h * jac.B(1, 0);
  return jac;
}

double Pendulum::Energy(const VectorXd& x) const {
  const auto& p = params_;
  const double inertia = p.mass * p.length * p.length;
  return 0.5 * inertia * x[1] * x[1] +
         p.mass * p.gravity * p.length * (1.0 - std::cos(x[0]));
}

}  // namespace bundleopt::systems
