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
#ifndef BUNDLEOPT_CONTACT_CONTACT_2D_H_
#define BUNDLEOPT_CONTACT_CONTACT_2D_H_

#include <string_view>

#include <Eigen/Dense>

namespace bundleopt::contact {

// Planar sphere-box system. The box slides along x on a frictionless floor
// (position x_u, at rest at the start of each step). A quasi-static sphere
// robot at (x_a, y_a) is driven by a spring of stiffness k toward the
// commanded position and touches the box's top face through Coulomb
// friction: the contact normal is +y and the tangent is x, so only friction
// can move the box. The face is treated as unbounded in x, and the signed
// gap is y_a - (box_half_height + sphere_radius).
struct Contact2DParams {
  double mass = 1.0;
  double timestep = 0.1;
  double stiffness = 100.0;
  double friction = 0.5;
  double box_half_height = 0.5;
  double sphere_radius = 0.1;

  double c_ratio() const { return mass / (timestep * timestep * stiffness); }
  // Height of the sphere center when touching the face.
  double contact_height() const { return box_half_height + sphere_radius; }
  // Throws ConfigError unless every field is finite and positive.
  void Validate() const;
};

struct Contact2DState {
  double x_u = 0.0;
  double x_a = 0.0;
  double y_a = 0.0;

  Eigen::Vector3d AsVector() const { return {x_u, x_a, y_a}; }
  static Contact2DState FromVector(const Eigen::Vector3d& v) {
    return {v[0], v[1], v[2]};
  }
};

// Sliding directions refer to the sign of the sphere's tangential motion
// relative to the box.
enum class Contact2DMode {
  kSeparation,
  kSticking,
  kSlidingPositive,
  kSlidingNegative,
};

std::string_view ToString(Contact2DMode mode);

struct Contact2DDiagnostics {
  Contact2DMode mode = Contact2DMode::kSeparation;
  // More than one mode was consistent within tolerance; the first in
  // declaration order was chosen.
  bool tie = false;
  // Impulse of the face on the sphere along +y, >= 0.
  double normal_impulse = 0.0;
  // Friction impulse on the box along +x (the sphere receives the opposite).
  double tangential_impulse = 0.0;
  // Signed gap after the step.
  double gap = 0.0;
  // Largest violation among: impulse sign, penetration, |normal * gap|,
  // friction-cone excess, and (sliding) friction not opposing slip.
  double complementarity = 0.0;
};

struct Contact2DResult {
  Contact2DState next;
  Contact2DDiagnostics diagnostics;
};

// Exact Coulomb step by mode enumeration: each of the four modes fixes the
// complementarity pattern, leaving a linear system with a closed-form
// solution; the returned mode is the first whose inequalities hold to 1e-9.
Contact2DResult Step2DExact(const Contact2DState& state,
                            const Eigen::Vector2d& command,
                            const Contact2DParams& params);

// Relaxed step: a strictly convex QP in the displacements
// (dx_u, dx_a, dy_a) with cost (m/2h) dx_u^2 + (hk/2)|dq_a - (command - q_a)|^2
// and the two friction-cone edge constraints
//   gap + dy_a + mu e (dx_a - dx_u) >= 0,  e = +1, -1.
// Impulses come from the duals. Agrees with the exact step while sticking or
// well separated; in sliding it drags the box across a boundary layer of
// width mu |tangential motion| above the face.
Contact2DResult Step2DAnitescu(const Contact2DState& state,
                               const Eigen::Vector2d& command,
                               const Contact2DParams& params);

}  // namespace bundleopt::contact

#endif  // BUNDLEOPT_CONTACT_CONTACT_2D_H_
