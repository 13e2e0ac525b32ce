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
#ifndef BUNDLEOPT_SYSTEMS_DYNAMICAL_SYSTEM_H_
#define BUNDLEOPT_SYSTEMS_DYNAMICAL_SYSTEM_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bundleopt::systems {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Absolute step used by every central-difference Jacobian in the library.
inline constexpr double kFiniteDifferenceStep = 1e-6;

struct StepJacobians {
  MatrixXd A;  // d x_{t+1} / d x_t, n x n
  MatrixXd B;  // d x_{t+1} / d u_t, n x m
};

// Discrete-time system x_{t+1} = f(x_t, u_t). Implementations are stateless
// and may be stepped concurrently from several threads.
class DynamicalSystem {
 public:
  virtual ~DynamicalSystem() = default;

  virtual int state_dim() const = 0;
  virtual int input_dim() const = 0;
  virtual std::string name() const = 0;

  virtual VectorXd Step(const VectorXd& x, const VectorXd& u) const = 0;

  virtual bool HasAnalyticJacobians() const { return false; }

  // Analytic Jacobians when the system provides them, central differences
  // with kFiniteDifferenceStep otherwise. At non-differentiable points the
  // analytic versions return the one-sided right derivative.
  virtual StepJacobians Jacobians(const VectorXd& x, const VectorXd& u) const;

  // Throws ConfigError on a dimension mismatch.
  void CheckDimensions(const VectorXd& x, const VectorXd& u) const;
};

StepJacobians FiniteDifferenceJacobians(const DynamicalSystem& system,
                                        const VectorXd& x, const VectorXd& u,
                                        double step = kFiniteDifferenceStep);

// Affine model x_{t+1} ~= A x_t + B u_t + c around (x_nominal, u_nominal).
struct LinearizedDynamics {
  MatrixXd A;
  MatrixXd B;
  VectorXd c;
  VectorXd x_nominal;
  VectorXd u_nominal;

  VectorXd Predict(const VectorXd& x, const VectorXd& u) const {
    return A * x + B * u + c;
  }
};

// Completes (A, B) into an affine model by choosing
// c = f(x, u) - A x - B u, so the model is exact at the nominal point.
LinearizedDynamics MakeAffineModel(const DynamicalSystem& system,
                                   const VectorXd& x, const VectorXd& u,
                                   MatrixXd A, MatrixXd B);

// First-order Taylor expansion of the dynamics at (x, u).
LinearizedDynamics LinearizeExact(const DynamicalSystem& system,
                                  const VectorXd& x, const VectorXd& u);

// Rolls the system forward from x0 under inputs us; returns us.size() + 1
// states.
std::vector<VectorXd> Rollout(const DynamicalSystem& system,
                              const VectorXd& x0,
                              const std::vector<VectorXd>& us);

}  // namespace bundleopt::systems

#endif  // BUNDLEOPT_SYSTEMS_DYNAMICAL_SYSTEM_H_
