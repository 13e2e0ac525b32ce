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
#include "bundleopt/systems/quadrotor.h"

#include <cmath>

#include "bundleopt/common/error.h"

namespace bundleopt::systems {

Quadrotor::Quadrotor(QuadrotorParams params) : params_(params) {
  const auto& p = params_;
  if (!(p.mass > 0 && p.arm_length > 0 && p.inertia_x > 0 &&
        p.inertia_y > 0 && p.inertia_z > 0 && p.yaw_coefficient > 0 &&
        p.gravity >= 0 && p.timestep > 0)) {
    throw ConfigError("Quadrotor: physical parameters must be positive");
  }
}

VectorXd Quadrotor::Derivative(const VectorXd& x, const VectorXd& u) const {
  CheckDimensions(x, u);
  const auto& p = params_;
  const double roll = x[3], pitch = x[4], yaw = x[5];
  const Eigen::Vector3d velocity = x.segment<3>(6);
  const Eigen::Vector3d omega = x.segment<3>(9);

  const double thrust = u.sum();
  const Eigen::Vector3d torque(
      p.arm_length * (u[1] - u[3]), p.arm_length * (u[2] - u[0]),
      p.yaw_coefficient * (u[0] - u[1] + u[2] - u[3]));

  const Eigen::Matrix3d rotation =
      (Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()) *
       Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()) *
       Eigen::AngleAxisd(roll, Eigen::Vector3d::UnitX()))
          .toRotationMatrix();

  const double sr = std::sin(roll), cr = std::cos(roll);
  const double cp = std::cos(pitch), tp = std::tan(pitch);
  Eigen::Matrix3d body_to_euler_rate;
  body_to_euler_rate << 1.0, sr * tp, cr * tp,  //
      0.0, cr, -sr,                              //
      0.0, sr / cp, cr / cp;

  const Eigen::Vector3d inertia(p.inertia_x, p.inertia_y, p.inertia_z);
  const Eigen::Vector3d angular_momentum = inertia.cwiseProduct(omega);

  VectorXd dx(12);
  dx.segment<3>(0) = velocity;
  dx.segment<3>(3) = body_to_euler_rate * omega;
  dx.segment<3>(6) = rotation * Eigen::Vector3d(0.0, 0.0, thrust / p.mass) -
                     Eigen::Vector3d(0.0, 0.0, p.gravity);
  dx.segment<3>(9) =
      (torque - omega.cross(angular_momentum)).cwiseQuotient(inertia);
  return dx;
}

VectorXd Quadrotor::Step(const VectorXd& x, const VectorXd& u) const {
  return x + params_.timestep * Derivative(x, u);
}

}  // namespace bundleopt::systems
