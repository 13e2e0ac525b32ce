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
#include "bench_cli/commands.h"

#include <string>
#include <vector>

#include <spdlog/spdlog.h>

#include "bench_cli/configs.h"
#include "bench_cli/output.h"
#include "bundleopt/common/parallel.h"
#include "bundleopt/common/random.h"
#include "bundleopt/contact/contact_2d.h"
#include "bundleopt/smoothing/distribution.h"
#include "bundleopt/smoothing/estimators.h"
#include "bundleopt/smoothing/quadrature.h"

namespace bundleopt::cli {
namespace {

using Eigen::VectorXd;

void PrepareOutput(Json& config, const RunOptions& options) {
  if (options.seed) config["seed"] = *options.seed;
  std::filesystem::create_directories(options.out_dir);
}

std::string Flag(bool b) { return b ? "1" : "0"; }

}  // namespace

void RunBundleEval(Json config, const RunOptions& options) {
  PrepareOutput(config, options);
  const BundleEvalConfig c = ParseBundleEvalConfig(config);
  const auto dist = smoothing::GaussianDistribution::Isotropic(1, c.sigma);
  spdlog::info("bundle-eval: {} at {} points, sigma={}, N={}",
               c.function.name, c.grid.points, c.sigma, c.sample_count);

  std::vector<std::vector<std::string>> rows(c.grid.points);
  ParallelFor(c.grid.points, options.jobs, [&](int i) {
    const VectorXd x = VectorXd::Constant(1, c.grid.At(i));
    const std::uint64_t seed = DeriveSeed(c.seed, {static_cast<std::uint64_t>(i)});
    const auto value =
        smoothing::BundledObjective(c.function, x, dist, c.sample_count, seed);
    const auto first = smoothing::FirstOrderGradientBundle(
        c.function, x, dist, c.sample_count, seed);
    const auto zero = smoothing::ZeroOrderGradientBundle(
        c.function, x, dist, c.sample_count, seed);
    const auto oracle =
        smoothing::ConvolutionOracle(c.function, x, dist, c.quadrature_points);
    rows[i] = {FormatNumber(x[0]),
               FormatNumber(value.value),
               FormatNumber(value.StandardError()),
               FormatNumber(oracle.value),
               FormatNumber(first.value[0]),
               FormatNumber(first.StandardError()[0]),
               FormatNumber(zero.value[0]),
               FormatNumber(zero.StandardError()[0]),
               FormatNumber(oracle.gradient[0])};
  });

  CsvWriter csv(options.out_dir / "bundle_eval.csv",
                {"x", "estimate", "estimate_stderr", "oracle", "first_order",
                 "first_order_stderr", "zero_order", "zero_order_stderr",
                 "oracle_gradient"});
  for (const auto& row : rows) csv.Row(row);
  WriteManifest(options.out_dir,
                {"bundle-eval", config, {c.seed}, {"bundle_eval.csv"}});
}

void RunPlan(Json config, const RunOptions& options) {
  PrepareOutput(config, options);
  PlanConfig c = ParsePlanConfig(config);
  c.options.jobs = options.jobs;
  const std::vector<std::uint64_t> seeds = c.Seeds();
  spdlog::info("plan: task '{}' on {} with {} modes x {} seeds", c.task,
               c.system->name(), c.modes.size(), seeds.size());

  const std::vector<irs_lqr::ComparisonRow> runs = irs_lqr::RunComparison(
      *c.system, c.spec, c.x0, c.initial_inputs, c.modes, seeds, c.options);

  CsvWriter results(options.out_dir / "plan_results.csv",
                    {"task", "mode", "seed", "iteration", "cost",
                     "variance_factor", "relaxed_mpc_steps", "converged",
                     "diverged"});
  const int n = c.system->state_dim();
  const int m = c.system->input_dim();
  std::vector<std::string> traj_columns{"task", "mode", "seed", "t"};
  for (int i = 0; i < n; ++i) traj_columns.push_back("x" + std::to_string(i));
  for (int i = 0; i < m; ++i) traj_columns.push_back("u" + std::to_string(i));
  CsvWriter trajectories(options.out_dir / "plan_trajectories.csv",
                         traj_columns);

  for (const irs_lqr::ComparisonRow& run : runs) {
    const std::string mode(irs_lqr::ToString(run.mode));
    const std::string seed = std::to_string(run.seed);
    const irs_lqr::IrsLqrResult& r = run.result;
    spdlog::info("plan: {} seed {}: cost {} -> {} after {} iterations{}{}",
                 mode, seed, r.initial_cost(), r.final_cost(),
                 r.history.size() - 1, r.converged ? " (converged)" : "",
                 r.diverged ? " (diverged)" : "");
    for (const irs_lqr::IterationRecord& rec : r.history) {
      results.Row({c.task, mode, seed, std::to_string(rec.iteration),
                   FormatNumber(rec.cost), FormatNumber(rec.variance_factor),
                   std::to_string(rec.relaxed_mpc_steps), Flag(r.converged),
                   Flag(r.diverged)});
    }
    for (size_t t = 0; t < r.states.size(); ++t) {
      std::vector<std::string> row{c.task, mode, seed, std::to_string(t)};
      for (int i = 0; i < n; ++i) row.push_back(FormatNumber(r.states[t][i]));
      for (int i = 0; i < m; ++i) {
        row.push_back(t < r.inputs.size() ? FormatNumber(r.inputs[t][i]) : "");
      }
      trajectories.Row(row);
    }
  }
  WriteManifest(options.out_dir,
                {"plan", config, seeds,
                 {"plan_results.csv", "plan_trajectories.csv"}});
}

void RunContactProbe(Json config, const RunOptions& options) {
  PrepareOutput(config, options);
  const ContactProbeConfig c = ParseContactProbeConfig(config);
  const auto dist = smoothing::GaussianDistribution::Isotropic(2, c.sigma);
  const int nx = c.x_grid.points;
  const int cells = nx * c.y_offset_grid.points;
  const double base_y = c.state.y_a;
  spdlog::info("contact-probe: {} commands, sigma={}", cells, c.sigma);

  // Box position after one step under both models, as a 2-vector.
  const auto both = [&](const VectorXd& cmd) {
    const Eigen::Vector2d command = cmd;
    return VectorXd(Eigen::Vector2d(
        contact::Step2DExact(c.state, command, c.params).next.x_u,
        contact::Step2DAnitescu(c.state, command, c.params).next.x_u));
  };

  std::vector<std::vector<std::string>> rows(cells);
  ParallelFor(cells, options.jobs, [&](int k) {
    const Eigen::Vector2d cmd(c.x_grid.At(k % nx),
                              base_y + c.y_offset_grid.At(k / nx));
    const auto exact = contact::Step2DExact(c.state, cmd, c.params);
    const auto relaxed = contact::Step2DAnitescu(c.state, cmd, c.params);
    VectorXd bundled;
    if (c.method == BundleMethod::kQuadrature) {
      smoothing::QuadratureOptions q;
      q.points = c.quadrature_points;
      bundled = smoothing::GaussianExpectation(both, cmd, dist, q);
    } else {
      const auto batch = smoothing::SamplePerturbations(
          dist, c.sample_count,
          DeriveSeed(c.seed, {static_cast<std::uint64_t>(k)}));
      bundled = VectorXd::Zero(2);
      for (int s = 0; s < batch.count(); ++s) {
        bundled += both(cmd + batch.samples.col(s));
      }
      bundled /= batch.count();
    }
    rows[k] = {FormatNumber(cmd.x()),
               FormatNumber(cmd.y()),
               FormatNumber(exact.next.x_u),
               FormatNumber(relaxed.next.x_u),
               FormatNumber(bundled[0]),
               FormatNumber(bundled[1]),
               std::string(contact::ToString(exact.diagnostics.mode))};
  });

  CsvWriter csv(options.out_dir / "contact_probe.csv",
                {"x_cmd", "y_cmd", "exact", "relaxed", "bundled_exact",
                 "bundled_relaxed", "exact_mode"});
  for (const auto& row : rows) csv.Row(row);
  WriteManifest(options.out_dir,
                {"contact-probe", config, {c.seed}, {"contact_probe.csv"}});
}

}  // namespace bundleopt::cli
