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
#include "bundleopt/contact/contact_2d.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "bundleopt/common/error.h"
#include "bundleopt/qp/qp.h"

namespace bundleopt::contact {
namespace {

constexpr double kModeTolerance = 1e-9;

struct ModeSolution {
  Contact2DState next;
  double normal = 0.0;
  double tangential = 0.0;
};

double Complementarity(const Contact2DState& state, const ModeSolution& s,
                       Contact2DMode mode, const Contact2DParams& params) {
  const double gap = s.next.y_a - params.contact_height();
  double r = std::max({0.0, -s.normal, -gap, std::abs(s.normal * gap),
                       std::abs(s.tangential) - params.friction * s.normal});
  const double slip = (s.next.x_a - state.x_a) - (s.next.x_u - state.x_u);
  if (mode == Contact2DMode::kSlidingPositive ||
      mode == Contact2DMode::kSlidingNegative) {
    // Friction on the box has the sign of the sphere's slip, so the sphere
    // feels friction opposing it.
    r = std::max(r, std::abs(s.tangential * slip) - s.tangential * slip);
  }
  return r;
}

}  // namespace

void Contact2DParams::Validate() const {
  for (double v : {mass, timestep, stiffness, friction, box_half_height,
                   sphere_radius}) {
    if (!std::isfinite(v) || v <= 0) {
      throw ConfigError("Contact2DParams: all fields must be positive");
    }
  }
}

std::string_view ToString(Contact2DMode mode) {
  switch (mode) {
    case Contact2DMode::kSeparation:
      return "separation";
    case Contact2DMode::kSticking:
      return "sticking";
    case Contact2DMode::kSlidingPositive:
      return "sliding_positive";
    case Contact2DMode::kSlidingNegative:
      return "sliding_negative";
  }
  return "unknown";
}

Contact2DResult Step2DExact(const Contact2DState& state,
                            const Eigen::Vector2d& command,
                            const Contact2DParams& params) {
  params.Validate();
  const double h = params.timestep;
  const double hk = h * params.stiffness;
  const double mu = params.friction;
  const double D = params.contact_height();
  const double dx_cmd = command[0] - state.x_a;
  // Normal impulse of any contact mode: the face holds the sphere at D.
  const double normal = hk * (D - command[1]);
  const double tol = kModeTolerance * std::max(1.0, std::abs(normal));

  const auto separation = [&]() -> std::optional<ModeSolution> {
    if (command[1] - D < -kModeTolerance) return std::nullopt;
    return ModeSolution{{state.x_u, command[0], command[1]}, 0.0, 0.0};
  };
  const auto sticking = [&]() -> std::optional<ModeSolution> {
    if (normal < -tol) return std::nullopt;
    const double dx = dx_cmd / (1.0 + params.c_ratio());
    const double tangential = params.mass * dx / h;
    if (std::abs(tangential) > mu * normal + tol) return std::nullopt;
    return ModeSolution{{state.x_u + dx, state.x_a + dx, D}, normal,
                        tangential};
  };
  const auto sliding = [&](double e) -> std::optional<ModeSolution> {
    if (normal < -tol) return std::nullopt;
    const double tangential = e * mu * normal;
    const double dx_u = h * tangential / params.mass;
    const double x_a = command[0] - tangential / hk;
    const double slip = (x_a - state.x_a) - dx_u;
    if (e * slip < -kModeTolerance) return std::nullopt;
    return ModeSolution{{state.x_u + dx_u, x_a, D}, normal, tangential};
  };

  struct Candidate {
    Contact2DMode mode;
    std::optional<ModeSolution> solution;
  };
  const Candidate candidates[] = {
      {Contact2DMode::kSeparation, separation()},
      {Contact2DMode::kSticking, sticking()},
      {Contact2DMode::kSlidingPositive, sliding(+1.0)},
      {Contact2DMode::kSlidingNegative, sliding(-1.0)},
  };

  Contact2DResult result;
  bool found = false;
  for (const Candidate& c : candidates) {
    if (!c.solution) continue;
    if (found) {
      result.diagnostics.tie = true;
      continue;
    }
    found = true;
    result.next = c.solution->next;
    result.diagnostics.mode = c.mode;
    result.diagnostics.normal_impulse = c.solution->normal;
    result.diagnostics.tangential_impulse = c.solution->tangential;
    result.diagnostics.gap = c.solution->next.y_a - D;
    result.diagnostics.complementarity =
        Complementarity(state, *c.solution, c.mode, params);
  }
  if (!found) {
    // The four modes partition the command space; reaching here means the
    // inputs were not finite.
    throw NumericalError("Step2DExact: no consistent contact mode");
  }
  return result;
}

Contact2DResult Step2DAnitescu(const Contact2DState& state,
                               const Eigen::Vector2d& command,
                               const Contact2DParams& params) {
  params.Validate();
  const double h = params.timestep;
  const double hk = h * params.stiffness;
  const double mu = params.friction;
  const double gap = state.y_a - params.contact_height();

  Eigen::Matrix3d P = Eigen::Vector3d(params.mass / h, hk, hk).asDiagonal();
  const Eigen::Vector3d q(0.0, -hk * (command[0] - state.x_a),
                          -hk * (command[1] - state.y_a));
  // -(dy_a + mu e (dx_a - dx_u)) <= gap.
  Eigen::MatrixXd G(2, 3);
  G << mu, -mu, -1.0,  //
      -mu, mu, -1.0;
  const Eigen::Vector2d bound(gap, gap);
  const qp::QpSolution sol = qp::SolveQp(qp::QpProblem(P, q, G, bound));
  if (!sol.optimal()) {
    throw NumericalError("Step2DAnitescu: contact QP returned " +
                         std::string(qp::ToString(sol.status)));
  }

  Contact2DResult result;
  result.next = {state.x_u + sol.z[0], state.x_a + sol.z[1],
                 state.y_a + sol.z[2]};
  Contact2DDiagnostics& d = result.diagnostics;
  d.normal_impulse = sol.lambda[0] + sol.lambda[1];
  d.tangential_impulse = -mu * (sol.lambda[0] - sol.lambda[1]);
  d.gap = result.next.y_a - params.contact_height();
  const double slip = sol.z[1] - sol.z[0];
  const double tol = kModeTolerance * std::max(1.0, d.normal_impulse);
  if (d.normal_impulse <= tol) {
    d.mode = Contact2DMode::kSeparation;
  } else if (std::abs(slip) <= kModeTolerance) {
    d.mode = Contact2DMode::kSticking;
  } else {
    d.mode = slip > 0 ? Contact2DMode::kSlidingPositive
                      : Contact2DMode::kSlidingNegative;
  }
  // The relaxation keeps the sphere off the face while sliding, so only the
  // cone and sign conditions are meaningful here.
  d.complementarity =
      std::max({0.0, -d.normal_impulse,
                std::abs(d.tangential_impulse) - mu * d.normal_impulse});
  return result;
}

}  // namespace bundleopt::contact
