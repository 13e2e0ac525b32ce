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
#ifndef BUNDLEOPT_TESTS_ORACLES_CONTACT_LCP_H_
#define BUNDLEOPT_TESTS_ORACLES_CONTACT_LCP_H_

#include <optional>

#include <Eigen/Dense>

#include "bundleopt/contact/contact_1d.h"
#include "bundleopt/contact/contact_2d.h"
#include "oracles/lcp_enumeration.h"

namespace bundleopt::testing {

struct LcpStep1D {
  double x_u = 0.0;
  double x_a = 0.0;
  double impulse = 0.0;
  bool in_contact = false;
};

// Eliminates positions from the 1D step equations, leaving the scalar LCP
//   gap = (x_u - command) + (h/m + 1/(hk)) impulse,  0 <= impulse _|_ gap >= 0.
inline std::optional<LcpStep1D> Step1DByLcp(double x_u, double command,
                                            const contact::Contact1DParams& p) {
  const double h = p.timestep;
  const double hk = h * p.stiffness;
  Eigen::MatrixXd M(1, 1);
  M(0, 0) = h / p.mass + 1.0 / hk;
  Eigen::VectorXd q(1);
  q[0] = x_u - command;
  const auto z = SolveLcpByEnumeration(M, q, 1e-13);
  if (!z) return std::nullopt;
  LcpStep1D out;
  out.impulse = (*z)[0];
  out.x_u = x_u + h * out.impulse / p.mass;
  out.x_a = command - out.impulse / hk;
  out.in_contact = out.impulse > 0.0 || q[0] <= 0.0;
  return out;
}

struct LcpStep2D {
  contact::Contact2DState next;
  double normal = 0.0;
  // Friction impulse on the box along +x.
  double tangential = 0.0;
};

// Stewart-Trinkle style LCP with a two-direction friction polyhedron, in the
// unknowns z = (normal, beta_plus, beta_minus, slip_bound):
//   w0 = y_cmd - D + normal/(hk)             (gap after the step)
//   w1 = slip_bound + s,  w2 = slip_bound - s (s: sphere slip relative to box)
//   w3 = mu normal - beta_plus - beta_minus
// The sphere receives friction beta_plus - beta_minus along +x.
inline std::optional<LcpStep2D> Step2DByLcp(const contact::Contact2DState& x,
                                            const Eigen::Vector2d& command,
                                            const contact::Contact2DParams& p) {
  const double h = p.timestep;
  const double hk = h * p.stiffness;
  const double D = p.contact_height();
  // s = (x_a+ - x_a) - dx_u with x_a+ = x_cmd + (bp - bm)/hk and
  // dx_u = h (bm - bp)/m.
  const double ds = 1.0 / hk + h / p.mass;
  Eigen::Matrix4d M;
  M << 1.0 / hk, 0, 0, 0,  //
      0, ds, -ds, 1,       //
      0, -ds, ds, 1,       //
      p.friction, -1, -1, 0;
  const double s0 = command[0] - x.x_a;
  Eigen::Vector4d q(command[1] - D, s0, -s0, 0.0);
  const auto z = SolveLcpByEnumeration(M, q, 1e-12);
  if (!z) return std::nullopt;
  LcpStep2D out;
  out.normal = (*z)[0];
  const double friction_on_sphere = (*z)[1] - (*z)[2];
  out.tangential = -friction_on_sphere;
  out.next.x_u = x.x_u + h * out.tangential / p.mass;
  out.next.x_a = command[0] + friction_on_sphere / hk;
  out.next.y_a = command[1] + out.normal / hk;
  return out;
}

}  // namespace bundleopt::testing

#endif  // BUNDLEOPT_TESTS_ORACLES_CONTACT_LCP_H_
