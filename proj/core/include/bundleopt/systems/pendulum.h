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
#ifndef BUNDLEOPT_SYSTEMS_PENDULUM_H_
#define BUNDLEOPT_SYSTEMS_PENDULUM_H_

#include "bundleopt/systems/dynamical_system.h"

namespace bundleopt::systems {

struct PendulumParams {
  double mass = 1.0;
  double length = 1.0;
  double gravity = 9.81;
  double damping = 0.0;
  double timestep = 0.05;
};

// Torque-driven pendulum, state (theta, theta_dot) with theta = 0 hanging
// down, integrated with semi-implicit Euler:
//   theta_ddot = (u - damping * theta_dot - m g l sin(theta)) / (m l^2)
//   theta_dot+ = theta_dot + h * theta_ddot
//   theta+     = theta + h * theta_dot+
class Pendulum final : public DynamicalSystem {
 public:
  explicit Pendulum(PendulumParams params = {});

  int state_dim() const override { return 2; }
  int input_dim() const override { return 1; }
  std::string name() const override { return "pendulum"; }

  VectorXd Step(const VectorXd& x, const VectorXd& u) const override;
  bool HasAnalyticJacobians() const override { return true; }
  StepJacobians Jacobians(const VectorXd& x, const VectorXd& u) const override;

  // Total mechanical energy, zero at the bottom equilibrium at rest.
  double Energy(const VectorXd& x) const;

  const PendulumParams& params() const { return params_; }

 private:
  PendulumParams params_;
};

}  // namespace bundleopt::systems

#endif  // BUNDLEOPT_SYSTEMS_PENDULUM_H_
