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
#ifndef BUNDLEOPT_CONTACT_PENALTY_H_
#define BUNDLEOPT_CONTACT_PENALTY_H_

#include <cstdint>

#include <Eigen/Dense>

#include "bundleopt/smoothing/distribution.h"

namespace bundleopt::contact {

// Stiff-spring normal force with a speed-dependent friction coefficient:
//   mu(|psi|) = viscous_slope |psi|  for |psi| <= stick_slip_speed
//             = dynamic_friction     otherwise.
// With viscous_slope * stick_slip_speed > dynamic_friction the coefficient
// drops at the threshold (Stribeck effect); equality gives a continuous
// model.
struct PenaltyParams {
  double normal_stiffness = 1000.0;
  double viscous_slope = 8.0;
  double stick_slip_speed = 0.1;
  double dynamic_friction = 0.5;

  bool IsContinuous(double tol = 1e-12) const;
  // Jump of the friction coefficient at the threshold (>= 0 for Stribeck).
  double FrictionDrop() const {
    return viscous_slope * stick_slip_speed - dynamic_friction;
  }
  // Throws ConfigError unless every field is finite and positive.
  void Validate() const;
};

struct PenaltyForces {
  double normal = 0.0;
  double tangential = 0.0;
};

// phi: signed distance (negative when penetrating); psi: tangential sliding
// speed. f_n = -k_n min(phi, 0), f_t = -sign(psi) mu(|psi|) f_n.
PenaltyForces ComputePenaltyForces(double phi, double psi,
                                   const PenaltyParams& params);

struct SmoothedPenaltyForces {
  double normal = 0.0;
  double tangential = 0.0;
  double normal_variance = 0.0;
  double tangential_variance = 0.0;
  int sample_count = 0;
};

// Monte-Carlo average of the penalty forces over (phi, psi) + w, with w
// drawn from the two-dimensional dist. Reusing a seed reuses the samples,
// so nearby evaluations share their noise.
SmoothedPenaltyForces SmoothPenaltyForces(double phi, double psi,
                                          const smoothing::GaussianDistribution&
                                              dist,
                                          int n, std::uint64_t seed,
                                          const PenaltyParams& params);

// One-dimensional second-order pushing: a box of mass m (position x_u,
// velocity v_u) and a quasi-static robot (position x_a) on its left, driven
// toward the command by a spring of stiffness k. Contact is a penalty spring
// on the overlap x_a - x_u.
struct PenaltyStep1DParams {
  // May be +infinity for an immovable box.
  double box_mass = 1.0;
  double robot_stiffness = 100.0;
  double normal_stiffness = 1000.0;
  double timestep = 0.005;

  // Throws ConfigError for nonpositive values or when
  // h sqrt(k_n / m) > 0.2, the stability limit of the explicit force.
  void Validate() const;
};

struct PenaltyState1D {
  double x_u = 0.0;
  double v_u = 0.0;
  double x_a = 0.0;
};

struct PenaltyStep1DResult {
  PenaltyState1D next;
  // Penalty force on the box used for the velocity update.
  double normal_force = 0.0;
};

// Semi-implicit Euler for the box (force from the current overlap); the
// robot then settles where its spring balances the penalty force against
// the updated box position. Throws DivergedError if the state leaves
// |x| <= 1e6.
PenaltyStep1DResult PenaltyStep1D(const PenaltyState1D& state, double command,
                                  const PenaltyStep1DParams& params);

}  // namespace bundleopt::contact

#endif  // BUNDLEOPT_CONTACT_PENALTY_H_
