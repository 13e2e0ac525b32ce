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

#include "bundleopt/contact/contact_1d.h"
#include "bundleopt/contact/contact_2d.h"
#include "bundleopt/contact/penalty.h"

namespace bundleopt::contact {
namespace {

void BM_Step1D(benchmark::State& state) {
  const Contact1DParams p;
  double cmd = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Step1D({1.0, 0.0}, cmd, p));
    cmd = cmd > 2.0 ? 0.0 : cmd + 0.01;
  }
}
BENCHMARK(BM_Step1D);

// Commands in the sticking, sliding and separated regions.
const Eigen::Vector2d kCommands[] = {{0.0, 0.5}, {0.4, 0.3}, {0.2, 0.8}};

void BM_Step2DExact(benchmark::State& state) {
  const Contact2DParams p;
  const Contact2DState s{0.0, 0.0, p.contact_height()};
  const Eigen::Vector2d cmd = kCommands[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(Step2DExact(s, cmd, p));
}
BENCHMARK(BM_Step2DExact)->DenseRange(0, 2);

void BM_Step2DAnitescu(benchmark::State& state) {
  const Contact2DParams p;
  const Contact2DState s{0.0, 0.0, p.contact_height()};
  const Eigen::Vector2d cmd = kCommands[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(Step2DAnitescu(s, cmd, p));
}
BENCHMARK(BM_Step2DAnitescu)->DenseRange(0, 2);

void BM_SmoothPenaltyForces(benchmark::State& state) {
  const PenaltyParams p;
  const auto dist = smoothing::GaussianDistribution::Diagonal(
      Eigen::Vector2d(0.005, 0.03));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SmoothPenaltyForces(-0.01, 0.1, dist, 10000, 1, p));
  }
}
BENCHMARK(BM_SmoothPenaltyForces);

}  // namespace
}  // namespace bundleopt::contact

BENCHMARK_MAIN();
