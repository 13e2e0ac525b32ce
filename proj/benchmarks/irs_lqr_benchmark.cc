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

#include "bundleopt/contact/contact_systems.h"
#include "bundleopt/irs_lqr/irs_lqr.h"
#include "bundleopt/systems/dubins_car.h"

namespace bundleopt::irs_lqr {
namespace {

void BM_SolveMpcDubins(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const systems::DubinsCar car(0.1);
  const MpcSpec spec = MpcSpec::TimeInvariant(
      T, MatrixXd::Identity(3, 3), 0.1 * MatrixXd::Identity(2, 2),
      10 * MatrixXd::Identity(3, 3), Eigen::Vector3d(1.0, 1.0, 0.0));
  std::vector<VectorXd> us(T, Eigen::Vector2d(0.5, 0.2));
  std::vector<VectorXd> xs = systems::Rollout(car, VectorXd::Zero(3), us);
  const auto models = LinearizeTrajectory(car, xs, us, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveMpc(spec, 0, xs[0], models));
  }
}
BENCHMARK(BM_SolveMpcDubins)->Arg(10)->Arg(30);

void BM_IrsLqrPush1D(benchmark::State& state) {
  const contact::Contact1DSystem sys;
  const MpcSpec spec = MpcSpec::TimeInvariant(
      10, VectorXd(Eigen::Vector2d(10, 0)).asDiagonal(),
      MatrixXd::Constant(1, 1, 0.01),
      VectorXd(Eigen::Vector2d(100, 0)).asDiagonal(), Eigen::Vector2d(2, 0));
  IrsLqrOptions opts;
  opts.mode = static_cast<GradientMode>(state.range(0));
  opts.covariance0 = InputOnlyCovariance(2, 1, 1.0);
  opts.schedule = smoothing::VarianceSchedule::Geometric(0.7);
  const std::vector<VectorXd> u0(10, VectorXd::Zero(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunIrsLqr(sys, spec, Eigen::Vector2d(1, 0), u0, opts));
  }
}
BENCHMARK(BM_IrsLqrPush1D)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bundleopt::irs_lqr

BENCHMARK_MAIN();
