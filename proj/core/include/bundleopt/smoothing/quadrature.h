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
#ifndef BUNDLEOPT_SMOOTHING_QUADRATURE_H_
#define BUNDLEOPT_SMOOTHING_QUADRATURE_H_

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "bundleopt/smoothing/distribution.h"
#include "bundleopt/smoothing/test_functions.h"

namespace bundleopt::smoothing {

// Nodes and weights of a one-dimensional rule.
struct QuadratureRule {
  VectorXd nodes;
  VectorXd weights;
};

// n-point Gauss-Hermite rule for the standard normal density (probabilists'
// convention): sum_i w_i g(z_i) ~= E[g(Z)], Z ~ N(0, 1). Weights sum to 1.
// Rules are computed once per n and cached.
const QuadratureRule& GaussHermiteRule(int n);

// n-point Gauss-Legendre rule on [-1, 1].
const QuadratureRule& GaussLegendreRule(int n);

struct QuadratureOptions {
  // Gauss-Hermite points per perturbed dimension; a lower bound on the total
  // node count of the composite rule used when breakpoints are given.
  int points = 201;
  // Coordinate values where the integrand has kinks or jumps. Honored when
  // the covariance is diagonal; the rule along each axis is then a composite
  // Gauss-Legendre rule with panel edges at the breakpoints.
  std::vector<double> breakpoints;
};

// E[fn(mean + w)], w ~ dist, by tensor-product quadrature. Supports at most
// three perturbed dimensions (UnsupportedError otherwise).
VectorXd GaussianExpectation(
    const std::function<VectorXd(const VectorXd&)>& fn, const VectorXd& mean,
    const GaussianDistribution& dist, const QuadratureOptions& options = {});

struct OracleResult {
  double value = 0.0;
  VectorXd gradient;
};

// Bundled objective and its gradient by quadrature. The gradient integrates
// grad f when f is continuous and has a gradient; otherwise it is a central
// difference of the quadrature value with step 1e-3 standard deviations.
OracleResult ConvolutionOracle(const ScalarFunction& f, const VectorXd& x,
                               const GaussianDistribution& dist,
                               int quadrature_points = 201);

}  // namespace bundleopt::smoothing

#endif  // BUNDLEOPT_SMOOTHING_QUADRATURE_H_
