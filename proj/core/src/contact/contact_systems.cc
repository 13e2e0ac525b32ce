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
#include "bundleopt/contact/contact_systems.h"

namespace bundleopt::contact {

Contact1DSystem::Contact1DSystem(Contact1DParams params) : params_(params) {
  params_.Validate();
}

VectorXd Contact1DSystem::Step(const VectorXd& x, const VectorXd& u) const {
  CheckDimensions(x, u);
  const Contact1DResult r = Step1D({x[0], x[1]}, u[0], params_);
  return Eigen::Vector2d(r.next.x_u, r.next.x_a);
}

systems::StepJacobians Contact1DSystem::Jacobians(const VectorXd& x,
                                                  const VectorXd& u) const {
  CheckDimensions(x, u);
  const Eigen::Matrix<double, 2, 3> J = Step1DJacobian({x[0], x[1]}, u[0],
                                                       params_);
  return {J.leftCols<2>(), J.rightCols<1>()};
}

Contact2DSystem::Contact2DSystem(Contact2DParams params, Contact2DModel model)
    : params_(params), model_(model) {
  params_.Validate();
}

std::string Contact2DSystem::name() const {
  return model_ == Contact2DModel::kExact ? "contact_2d_exact"
                                          : "contact_2d_anitescu";
}

VectorXd Contact2DSystem::Step(const VectorXd& x, const VectorXd& u) const {
  CheckDimensions(x, u);
  const Contact2DState state{x[0], x[1], x[2]};
  const Eigen::Vector2d command(u[0], u[1]);
  const Contact2DResult r = model_ == Contact2DModel::kExact
                                ? Step2DExact(state, command, params_)
                                : Step2DAnitescu(state, command, params_);
  return r.next.AsVector();
}

}  // namespace bundleopt::contact
