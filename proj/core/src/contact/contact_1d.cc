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
#include "bundleopt/contact/contact_1d.h"

#include <cmath>

#include "bundleopt/common/error.h"

namespace bundleopt::contact {

void Contact1DParams::Validate() const {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0; };
  if (!positive(mass) || !positive(timestep) || !positive(stiffness)) {
    throw ConfigError(
        "Contact1DParams: mass, timestep and stiffness must be positive");
  }
}

std::string_view ToString(Contact1DMode mode) {
  return mode == Contact1DMode::kContact ? "contact" : "separation";
}

Contact1DResult Step1D(const Contact1DState& state, double command,
                       const Contact1DParams& params) {
  params.Validate();
  const double h = params.timestep;
  const double hk = h * params.stiffness;
  Contact1DResult result;
  Contact1DDiagnostics& d = result.diagnostics;
  if (command < state.x_u) {
    d.mode = Contact1DMode::kSeparation;
    result.next = {state.x_u, command};
    d.impulse = 0.0;
  } else {
    const double c = params.c_ratio();
    const double x = (c * state.x_u + command) / (1.0 + c);
    d.mode = Contact1DMode::kContact;
    result.next = {x, x};
    d.impulse = hk * (command - x);
  }
  d.gap = result.next.x_u - result.next.x_a;
  d.complementarity = std::abs(d.impulse * d.gap);
  d.force_balance_residual =
      std::abs(hk * (command - result.next.x_a) - d.impulse);
  d.momentum_residual =
      std::abs(params.mass * (result.next.x_u - state.x_u) / h - d.impulse);
  return result;
}

Eigen::Matrix<double, 2, 3> Step1DJacobian(const Contact1DState& state,
                                           double command,
                                           const Contact1DParams& params) {
  params.Validate();
  Eigen::Matrix<double, 2, 3> J = Eigen::Matrix<double, 2, 3>::Zero();
  if (command < state.x_u) {
    J(0, 0) = 1.0;
    J(1, 2) = 1.0;
  } else {
    const double c = params.c_ratio();
    J(0, 0) = J(1, 0) = c / (1.0 + c);
    J(0, 2) = J(1, 2) = 1.0 / (1.0 + c);
  }
  return J;
}

}  // namespace bundleopt::contact
