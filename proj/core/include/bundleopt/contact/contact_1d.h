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
#ifndef BUNDLEOPT_CONTACT_CONTACT_1D_H_
#define BUNDLEOPT_CONTACT_CONTACT_1D_H_

#include <string_view>

#include <Eigen/Dense>

namespace bundleopt::contact {

// A quasi-static, position-controlled robot (actuated, at x_a) pushes a free
// box (unactuated, at x_u) from the left along a line. The robot's spring
// has stiffness k; the box has mass m and starts each step at rest.
struct Contact1DParams {
  double mass = 1.0;
  double timestep = 0.1;
  double stiffness = 100.0;

  // c = m / (h^2 k): how strongly the box resists the controller spring.
  double c_ratio() const { return mass / (timestep * timestep * stiffness); }
  // Throws ConfigError unless all fields are finite and positive.
  void Validate() const;
};

struct Contact1DState {
  double x_u = 0.0;
  double x_a = 0.0;
};

enum class Contact1DMode { kSeparation, kContact };

std::string_view ToString(Contact1DMode mode);

struct Contact1DDiagnostics {
  Contact1DMode mode = Contact1DMode::kSeparation;
  // Normal impulse over the step, >= 0.
  double impulse = 0.0;
  // x_u+ - x_a+, >= 0.
  double gap = 0.0;
  // |impulse * gap|.
  double complementarity = 0.0;
  // |hk (command - x_a+) - impulse|: robot spring balances the contact.
  double force_balance_residual = 0.0;
  // |m (x_u+ - x_u) / h - impulse|: box momentum comes from the impulse.
  double momentum_residual = 0.0;
};

struct Contact1DResult {
  Contact1DState next;
  Contact1DDiagnostics diagnostics;
};

// Implicit step. The pieces are
//   separation (command < x_u):  x_u+ = x_u, x_a+ = command
//   contact    (command >= x_u): x_u+ = x_a+ = (c x_u + command) / (1 + c).
Contact1DResult Step1D(const Contact1DState& state, double command,
                       const Contact1DParams& params);

// d(x_u+, x_a+) / d(x_u, x_a, command) of the active piece; at the boundary
// this is the contact piece, i.e. the right derivative in the command.
Eigen::Matrix<double, 2, 3> Step1DJacobian(const Contact1DState& state,
                                           double command,
                                           const Contact1DParams& params);

}  // namespace bundleopt::contact

#endif  // BUNDLEOPT_CONTACT_CONTACT_1D_H_
