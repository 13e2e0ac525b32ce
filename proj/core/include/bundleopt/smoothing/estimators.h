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
#ifndef BUNDLEOPT_SMOOTHING_ESTIMATORS_H_
#define BUNDLEOPT_SMOOTHING_ESTIMATORS_H_

#include <cstdint>

#include <Eigen/Dense>

#include "bundleopt/smoothing/distribution.h"
#include "bundleopt/smoothing/test_functions.h"
#include "bundleopt/systems/dynamical_system.h"

namespace bundleopt::smoothing {

using Eigen::MatrixXd;

// Monte-Carlo estimate of a scalar expectation together with the empirical
// (unbiased) variance of the summands it averages.
struct ScalarBundleEstimate {
  double value = 0.0;
  double empirical_variance = 0.0;
  int sample_count = 0;

  double StandardError() const;
};

// Vector-valued counterpart; variance is per entry.
struct BundleEstimate {
  VectorXd value;
  VectorXd empirical_variance;
  int sample_count = 0;

  VectorXd StandardError() const;
};

// Estimated Jacobian bundle (A, B) of a discrete-time system.
struct JacobianBundle {
  MatrixXd A;
  MatrixXd B;
  MatrixXd A_variance;
  MatrixXd B_variance;
  int sample_count = 0;
};

// (1/N) sum_i f(x + w_i).
ScalarBundleEstimate BundledObjective(const ScalarFunction& f,
                                      const VectorXd& x,
                                      const GaussianDistribution& dist, int n,
                                      std::uint64_t seed);

// (1/N) sum_i grad f(x + w_i). Requires f.gradient.
BundleEstimate FirstOrderGradientBundle(const ScalarFunction& f,
                                        const VectorXd& x,
                                        const GaussianDistribution& dist,
                                        int n, std::uint64_t seed);

// Least-squares slope argmin_g sum_i (f(x + w_i) - f(x) - g^T w_i)^2 over
// the range of the covariance. Directions the distribution does not
// perturb take the exact (or central-difference) gradient. The reported
// variance is that of the summands N * (W W^T)^{-1} w_i (f(x+w_i) - f(x)),
// whose mean is the estimate. Throws SingularRegressionError when the
// samples do not span the perturbed subspace.
BundleEstimate ZeroOrderGradientBundle(const ScalarFunction& f,
                                       const VectorXd& x,
                                       const GaussianDistribution& dist,
                                       int n, std::uint64_t seed);

// Perturbations are drawn jointly for (x, u); `dist` has dimension
// state_dim + input_dim with the state block first.
JacobianBundle FirstOrderJacobianBundle(const systems::DynamicalSystem& system,
                                        const VectorXd& x, const VectorXd& u,
                                        const GaussianDistribution& dist,
                                        int n, std::uint64_t seed);

// Least-squares fit of f(x + w_i, u + v_i) - f(x, u) ~ A w_i + B v_i, with
// the same null-space and variance conventions as ZeroOrderGradientBundle.
JacobianBundle ZeroOrderJacobianBundle(const systems::DynamicalSystem& system,
                                       const VectorXd& x, const VectorXd& u,
                                       const GaussianDistribution& dist,
                                       int n, std::uint64_t seed);

}  // namespace bundleopt::smoothing

#endif  // BUNDLEOPT_SMOOTHING_ESTIMATORS_H_
