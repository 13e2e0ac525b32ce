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
#ifndef BUNDLEOPT_TOOLS_BENCH_CLI_COMMANDS_H_
#define BUNDLEOPT_TOOLS_BENCH_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "bench_cli/json_reader.h"

namespace bundleopt::cli {

struct RunOptions {
  std::filesystem::path out_dir;
  // Replaces the config's "seed" entry when set.
  std::optional<std::uint64_t> seed;
  int jobs = 1;
};

// Grid sweep of a scalar test function: Monte-Carlo bundled value and both
// gradient bundles next to the quadrature oracle. Writes bundle_eval.csv.
void RunBundleEval(Json config, const RunOptions& options);

// Runs every (mode, seed) pair of iRS-LQR. Writes plan_results.csv (one row
// per iteration) and plan_trajectories.csv (final iterate of each run).
void RunPlan(Json config, const RunOptions& options);

// Sweeps sphere commands over a grid and records the box position after one
// step for the exact and relaxed models and their bundled versions. Writes
// contact_probe.csv.
void RunContactProbe(Json config, const RunOptions& options);

}  // namespace bundleopt::cli

#endif  // BUNDLEOPT_TOOLS_BENCH_CLI_COMMANDS_H_
