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
#ifndef BUNDLEOPT_TESTS_SUPPORT_RANDOM_QP_H_
#define BUNDLEOPT_TESTS_SUPPORT_RANDOM_QP_H_

#include <random>

#include <Eigen/Dense>

#include "bundleopt/qp/qp.h"

namespace bundleopt::testing {

// Random strictly convex QP that is feasible by construction: all rows hold
// at a random point z0, inequalities with slack in [0, 1).
inline qp::QpProblem RandomQp(std::mt19937_64& rng, int n, int m, int meq) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const auto randn = [&](int r, int c) {
    Eigen::MatrixXd out(r, c);
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i) out(i, j) = normal(rng);
    return out;
  };
  const Eigen::MatrixXd M = randn(n, n);
  const Eigen::MatrixXd P =
      M.transpose() * M + Eigen::MatrixXd::Identity(n, n);
  const Eigen::VectorXd q = 3.0 * randn(n, 1);
  const Eigen::MatrixXd G = randn(m, n);
  const Eigen::VectorXd z0 = randn(n, 1);
  Eigen::VectorXd h = G * z0;
  for (int i = 0; i < m; ++i) h[i] += uniform(rng);
  const Eigen::MatrixXd A = randn(meq, n);
  const Eigen::VectorXd b = A * z0;
  return qp::QpProblem(P, q, G, h, A, b);
}

}  // namespace bundleopt::testing

#endif  // BUNDLEOPT_TESTS_SUPPORT_RANDOM_QP_H_
