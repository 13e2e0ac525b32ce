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
#ifndef BUNDLEOPT_TOOLS_BENCH_CLI_CONFIGS_H_
#define BUNDLEOPT_TOOLS_BENCH_CLI_CONFIGS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bench_cli/json_reader.h"
#include "bundleopt/contact/contact_2d.h"
#include "bundleopt/irs_lqr/irs_lqr.h"
#include "bundleopt/irs_lqr/mpc.h"
#include "bundleopt/smoothing/test_functions.h"
#include "bundleopt/systems/dynamical_system.h"

namespace bundleopt::cli {

struct Grid1D {
  double min = 0.0;
  double max = 0.0;
  int points = 1;

  double At(int i) const;
};

struct BundleEvalConfig {
  smoothing::ScalarFunction function;
  double sigma = 0.2;
  int sample_count = 10000;
  Grid1D grid;
  int quadrature_points = 201;
  std::uint64_t seed = 0;
};

struct PlanConfig {
  std::string task;
  std::shared_ptr<const systems::DynamicalSystem> system;
  irs_lqr::MpcSpec spec;
  Eigen::VectorXd x0;
  std::vector<Eigen::VectorXd> initial_inputs;
  std::vector<irs_lqr::GradientMode> modes;
  // Seeds of the individual runs are seed, seed + 1, ...
  std::uint64_t seed = 0;
  int num_seeds = 1;
  irs_lqr::IrsLqrOptions options;

  std::vector<std::uint64_t> Seeds() const;
};

enum class BundleMethod { kQuadrature, kMonteCarlo };

struct ContactProbeConfig {
  contact::Contact2DParams params;
  contact::Contact2DState state;
  Grid1D x_grid;
  // Command heights relative to the contact height of the current state.
  Grid1D y_offset_grid;
  double sigma = 0.1;
  BundleMethod method = BundleMethod::kQuadrature;
  int quadrature_points = 41;
  int sample_count = 1000;
  std::uint64_t seed = 0;
};

// Each parser consumes the whole document and throws ConfigError with the
// dotted path of the first invalid or unknown field.
BundleEvalConfig ParseBundleEvalConfig(const Json& json);
PlanConfig ParsePlanConfig(const Json& json);
ContactProbeConfig ParseContactProbeConfig(const Json& json);

}  // namespace bundleopt::cli

#endif  // BUNDLEOPT_TOOLS_BENCH_CLI_CONFIGS_H_
