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
#include "bundleopt/systems/dynamical_system.h"

#include <sstream>

#include "bundleopt/common/error.h"

namespace bundleopt::systems {

void DynamicalSystem::CheckDimensions(const VectorXd& x,
                                      const VectorXd& u) const {
  if (x.size() != state_dim() || u.size() != input_dim()) {
    std::ostringstream msg;
    msg << name() << ": expected state/input of size " << state_dim() << "/"
        << input_dim() << ", got " << x.size() << "/" << u.size();
    throw ConfigError(msg.str());
  }
}

StepJacobians DynamicalSystem::Jacobians(const VectorXd& x,
                                         const VectorXd& u) const {
  return FiniteDifferenceJacobians(*this, x, u);
}

StepJacobians FiniteDifferenceJacobians(const DynamicalSystem& system,
                                        const VectorXd& x, const VectorXd& u,
                                        double step) {
  system.CheckDimensions(x, u);
  const int n = system.state_dim();
  const int m = system.input_dim();
  StepJacobians jac{MatrixXd(n, n), MatrixXd(n, m)};

  VectorXd xp = x;
  for (int i = 0; i < n; ++i) {
    xp[i] = x[i] + step;
    const VectorXd fp = system.Step(xp, u);
    xp[i] = x[i] - step;
    const VectorXd fm = system.Step(xp, u);
    xp[i] = x[i];
    jac.A.col(i) = (fp - fm) / (2.0 * step);
  }
  VectorXd up = u;
  for (int j = 0; j < m; ++j) {
    up[j] = u[j] + step;
    const VectorXd fp = system.Step(x, up);
    up[j] = u[j] - step;
    const VectorXd fm = system.Step(x, up);
    up[j] = u[j];
    jac.B.col(j) = (fp - fm) / (2.0 * step);
  }
  return jac;
}

LinearizedDynamics MakeAffineModel(const DynamicalSystem& system,
                                   const VectorXd& x, const VectorXd& u,
                                   MatrixXd A, MatrixXd B) {
  system.CheckDimensions(x, u);
  LinearizedDynamics lin;
  lin.c = system.Step(x, u) - A * x - B * u;
  lin.A = std::move(A);
  lin.B = std::move(B);
  lin.x_nominal = x;
  lin.u_nominal = u;
  return lin;
}

LinearizedDynamics LinearizeExact(const DynamicalSystem& system,
                                  const VectorXd& x, const VectorXd& u) {
  StepJacobians jac = system.Jacobians(x, u);
  return MakeAffineModel(system, x, u, std::move(jac.A), std::move(jac.B));
}

std::vector<VectorXd> Rollout(const DynamicalSystem& system,
                              const VectorXd& x0,
                              const std::vector<VectorXd>& us) {
  std::vector<VectorXd> xs;
  xs.reserve(us.size() + 1);
  xs.push_back(x0);
  for (const VectorXd& u : us) xs.push_back(system.Step(xs.back(), u));
  return xs;
}

}  // namespace bundleopt::systems
