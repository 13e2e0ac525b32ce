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
#include <benchmark/benchmark.h>

#include "bundleopt/smoothing/distribution.h"
#include "bundleopt/smoothing/estimators.h"
#include "bundleopt/smoothing/quadrature.h"
#include "bundleopt/smoothing/test_functions.h"
#include "bundleopt/systems/dubins_car.h"

namespace bundleopt::smoothing {
namespace {

void BM_FirstOrderGradientBundle(benchmark::State& state) {
  const ScalarFunction f = WigglyQuadratic();
  const auto dist = GaussianDistribution::Isotropic(1, 0.2);
  const VectorXd x = VectorXd::Constant(1, 0.3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(FirstOrderGradientBundle(f, x, dist, n, 1));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_FirstOrderGradientBundle)->Arg(100)->Arg(10000);

void BM_ZeroOrderGradientBundle(benchmark::State& state) {
  const ScalarFunction f = WigglyQuadratic();
  const auto dist = GaussianDistribution::Isotropic(1, 0.2);
  const VectorXd x = VectorXd::Constant(1, 0.3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ZeroOrderGradientBundle(f, x, dist, n, 1));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ZeroOrderGradientBundle)->Arg(100)->Arg(10000);

template <bool kFirstOrder>
void BM_JacobianBundle(benchmark::State& state) {
  const systems::DubinsCar car(0.1);
  const auto dist = GaussianDistribution::Isotropic(5, 0.3);
  const VectorXd x = Eigen::Vector3d(0.1, -0.2, 0.4);
  const VectorXd u = Eigen::Vector2d(1.0, 0.5);
  for (auto _ : state) {
    if constexpr (kFirstOrder) {
      benchmark::DoNotOptimize(FirstOrderJacobianBundle(car, x, u, dist, 100, 1));
    } else {
      benchmark::DoNotOptimize(ZeroOrderJacobianBundle(car, x, u, dist, 100, 1));
    }
  }
}
BENCHMARK(BM_JacobianBundle<true>)->Name("BM_FirstOrderJacobianBundle/dubins");
BENCHMARK(BM_JacobianBundle<false>)->Name("BM_ZeroOrderJacobianBundle/dubins");

void BM_ConvolutionOracle(benchmark::State& state) {
  const ScalarFunction f = Vee();
  const auto dist = GaussianDistribution::Isotropic(1, 0.2);
  const VectorXd x = VectorXd::Constant(1, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ConvolutionOracle(f, x, dist, 201));
  }
}
BENCHMARK(BM_ConvolutionOracle);

}  // namespace
}  // namespace bundleopt::smoothing

BENCHMARK_MAIN();
