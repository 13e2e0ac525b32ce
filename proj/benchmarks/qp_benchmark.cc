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
#include <random>

#include <benchmark/benchmark.h>

#include "bundleopt/qp/qp.h"

namespace bundleopt::qp {
namespace {

// Strictly convex QP with m random inequalities that all hold at z = 0 with
// slack, so the solver does real active-set work without infeasibility.
QpProblem RandomProblem(int n, int m, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n * n; ++i) M.data()[i] = normal(rng);
  Eigen::MatrixXd P = M * M.transpose() + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd q(n), h(m);
  Eigen::MatrixXd G(m, n);
  for (int i = 0; i < n; ++i) q[i] = 5.0 * normal(rng);
  for (int i = 0; i < m * n; ++i) G.data()[i] = normal(rng);
  for (int i = 0; i < m; ++i) h[i] = 0.5 + std::abs(normal(rng));
  return QpProblem(P, q, G, h);
}

void BM_SolveQp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const QpProblem problem = RandomProblem(n, m, 42);
  for (auto _ : state) {
    QpSolution sol = SolveQp(problem);
    benchmark::DoNotOptimize(sol.z.data());
  }
}
BENCHMARK(BM_SolveQp)->Args({6, 8})->Args({20, 40})->Args({60, 120});

}  // namespace
}  // namespace bundleopt::qp

BENCHMARK_MAIN();
