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
#ifndef BUNDLEOPT_CONTACT_CONTACT_SYSTEMS_H_
#define BUNDLEOPT_CONTACT_CONTACT_SYSTEMS_H_

#include <string>

#include "bundleopt/contact/contact_1d.h"
#include "bundleopt/contact/contact_2d.h"
#include "bundleopt/systems/dynamical_system.h"

namespace bundleopt::contact {

using Eigen::VectorXd;

// State (x_u, x_a), input: commanded robot position.
class Contact1DSystem final : public systems::DynamicalSystem {
 public:
  explicit Contact1DSystem(Contact1DParams params = {});

  int state_dim() const override { return 2; }
  int input_dim() const override { return 1; }
  std::string name() const override { return "contact_1d"; }

  VectorXd Step(const VectorXd& x, const VectorXd& u) const override;
  bool HasAnalyticJacobians() const override { return true; }
  systems::StepJacobians Jacobians(const VectorXd& x,
                                   const VectorXd& u) const override;

  const Contact1DParams& params() const { return params_; }

 private:
  Contact1DParams params_;
};

enum class Contact2DModel { kExact, kAnitescu };

// State (x_u, x_a, y_a), input: commanded sphere position (x, y).
// Jacobians are central differences of the piecewise-linear step.
class Contact2DSystem final : public systems::DynamicalSystem {
 public:
  Contact2DSystem(Contact2DParams params, Contact2DModel model);

  int state_dim() const override { return 3; }
  int input_dim() const override { return 2; }
  std::string name() const override;

  VectorXd Step(const VectorXd& x, const VectorXd& u) const override;

  const Contact2DParams& params() const { return params_; }
  Contact2DModel model() const { return model_; }

 private:
  Contact2DParams params_;
  Contact2DModel model_;
};

}  // namespace bundleopt::contact

#endif  // BUNDLEOPT_CONTACT_CONTACT_SYSTEMS_H_
