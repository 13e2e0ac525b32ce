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
#include "bundleopt/contact/penalty.h"

#include <cmath>
#include <limits>

#include "bundleopt/common/error.h"

namespace bundleopt::contact {

bool PenaltyParams::IsContinuous(double tol) const {
  return std::abs(FrictionDrop()) <= tol * std::max(1.0, dynamic_friction);
}

void PenaltyParams::Validate() const {
  for (double v : {normal_stiffness, viscous_slope, stick_slip_speed,
                   dynamic_friction}) {
    if (!std::isfinite(v) || v <= 0) {
      throw ConfigError("PenaltyParams: all fields must be positive");
    }
  }
}

PenaltyForces ComputePenaltyForces(double phi, double psi,
                                   const PenaltyParams& params) {
  PenaltyForces f;
  f.normal = -params.normal_stiffness * std::min(phi, 0.0);
  const double speed = std::abs(psi);
  const double mu = speed <= params.stick_slip_speed
                        ? params.viscous_slope * speed
                        : params.dynamic_friction;
  const double sign = psi > 0 ? 1.0 : (psi < 0 ? -1.0 : 0.0);
  f.tangential = -sign * mu * f.normal;
  return f;
}

SmoothedPenaltyForces SmoothPenaltyForces(
    double phi, double psi, const smoothing::GaussianDistribution& dist, int n,
    std::uint64_t seed, const PenaltyParams& params) {
  params.Validate();
  if (dist.dimension() != 2) {
    throw ConfigError("SmoothPenaltyForces: distribution must be over (phi, psi)");
  }
  const smoothing::PerturbationBatch batch =
      smoothing::SamplePerturbations(dist, n, seed);
  Eigen::ArrayXd fn(n), ft(n);
  for (int i = 0; i < n; ++i) {
    const PenaltyForces f = ComputePenaltyForces(
        phi + batch.samples(0, i), psi + batch.samples(1, i), params);
    fn[i] = f.normal;
    ft[i] = f.tangential;
  }
  SmoothedPenaltyForces out;
  out.sample_count = n;
  out.normal = fn.mean();
  out.tangential = ft.mean();
  if (n > 1) {
    out.normal_variance = (fn - out.normal).square().sum() / (n - 1);
    out.tangential_variance = (ft - out.tangential).square().sum() / (n - 1);
  }
  return out;
}

void PenaltyStep1DParams::Validate() const {
  if (!(box_mass > 0) || !(robot_stiffness > 0) || !(normal_stiffness > 0) ||
      !(timestep > 0) || !std::isfinite(robot_stiffness) ||
      !std::isfinite(normal_stiffness) || !std::isfinite(timestep)) {
    throw ConfigError("PenaltyStep1DParams: parameters must be positive");
  }
  const double stiffness_number =
      timestep * std::sqrt(normal_stiffness / box_mass);
  if (stiffness_number > 0.2) {
    throw ConfigError(
        "PenaltyStep1D: h*sqrt(k_n/m) = " + std::to_string(stiffness_number) +
        " exceeds 0.2; reduce the timestep");
  }
}

PenaltyStep1DResult PenaltyStep1D(const PenaltyState1D& state, double command,
                                  const PenaltyStep1DParams& params) {
  params.Validate();
  const double h = params.timestep;
  const double kn = params.normal_stiffness;
  const double k = params.robot_stiffness;

  PenaltyStep1DResult result;
  result.normal_force = kn * std::max(state.x_a - state.x_u, 0.0);
  PenaltyState1D& next = result.next;
  next.v_u = state.v_u + h * result.normal_force / params.box_mass;
  next.x_u = state.x_u + h * next.v_u;
  next.x_a = command <= next.x_u ? command
                                 : (k * command + kn * next.x_u) / (k + kn);

  const double norm = std::max(
      {std::abs(next.x_u), std::abs(next.v_u), std::abs(next.x_a)});
  if (!(norm <= 1e6)) {
    throw DivergedError(
        "PenaltyStep1D: state magnitude exceeded 1e6; reduce the timestep");
  }
  return result;
}

}  // namespace bundleopt::contact
