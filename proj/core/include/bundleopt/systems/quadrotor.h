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
#ifndef BUNDLEOPT_SYSTEMS_QUADROTOR_H_
#define BUNDLEOPT_SYSTEMS_QUADROTOR_H_

#include "bundleopt/systems/dynamical_system.h"

namespace bundleopt::systems {

struct QuadrotorParams {
  double mass = 0.5;
  double arm_length = 0.175;
  double inertia_x = 0.0023;
  double inertia_y = 0.0023;
  double inertia_z = 0.004;
  // Reaction torque per unit thrust.
  double yaw_coefficient = 0.01;
  double gravity = 9.81;
  double timestep = 0.02;
};

// 12-state rigid-body quadrotor in "+" configuration.
//
// State: position (3, world), roll/pitch/yaw (3, ZYX convention), linear
// velocity (3, world), angular velocity (3, body). Input: four rotor thrusts
// ordered front (+x), left (+y), back (-x), right (-y). Front and back spin
// the same way, so yaw torque is k (u0 - u1 + u2 - u3).
//
// Explicit Euler. The Euler-angle parametrization is singular at pitch =
// +-pi/2; no special handling is done there.
class Quadrotor final : public DynamicalSystem {
 public:
  explicit Quadrotor(QuadrotorParams params = {});

  int state_dim() const override { return 12; }
  int input_dim() const override { return 4; }
  std::string name() const override { return "quadrotor"; }

  VectorXd Step(const VectorXd& x, const VectorXd& u) const override;

  // Continuous-time state derivative.
  VectorXd Derivative(const VectorXd& x, const VectorXd& u) const;

  // Thrust per rotor that balances gravity.
  double HoverThrust() const { return params_.mass * params_.gravity / 4.0; }

  const QuadrotorParams& params() const { return params_; }

 private:
  QuadrotorParams params_;
};

}  // namespace bundleopt::systems

#endif  // BUNDLEOPT_SYSTEMS_QUADROTOR_H_
