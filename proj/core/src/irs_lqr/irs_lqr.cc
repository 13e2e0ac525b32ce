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
#include "bundleopt/irs_lqr/irs_lqr.h"

#include <cmath>
#include <optional>
#include <string>

#include "bundleopt/common/error.h"
#include "bundleopt/common/parallel.h"
#include "bundleopt/common/random.h"
#include "bundleopt/smoothing/estimators.h"

namespace bundleopt::irs_lqr {

std::string_view ToString(GradientMode mode) {
  switch (mode) {
    case GradientMode::kExact:
      return "exact";
    case GradientMode::kFirstOrder:
      return "first_order";
    case GradientMode::kZeroOrder:
      return "zero_order";
  }
  return "unknown";
}

GradientMode ParseGradientMode(std::string_view name) {
  if (name == "exact") return GradientMode::kExact;
  if (name == "first_order" || name == "first_order_bundle") {
    return GradientMode::kFirstOrder;
  }
  if (name == "zero_order" || name == "zero_order_bundle") {
    return GradientMode::kZeroOrder;
  }
  throw ConfigError("unknown gradient mode '" + std::string(name) +
                    "' (expected exact, first_order or zero_order)");
}

MatrixXd InputOnlyCovariance(int state_dim, int input_dim, double sigma) {
  MatrixXd cov = MatrixXd::Zero(state_dim + input_dim, state_dim + input_dim);
  cov.bottomRightCorner(input_dim, input_dim).diagonal().setConstant(sigma *
                                                                     sigma);
  return cov;
}

std::vector<systems::LinearizedDynamics> LinearizeTrajectory(
    const systems::DynamicalSystem& system, const std::vector<VectorXd>& xs,
    const std::vector<VectorXd>& us, const LinearizationOptions& options) {
  const int T = static_cast<int>(us.size());
  if (static_cast<int>(xs.size()) < T) {
    throw ConfigError("LinearizeTrajectory: fewer states than inputs");
  }
  const int dim = system.state_dim() + system.input_dim();
  std::optional<smoothing::GaussianDistribution> dist;
  if (options.mode != GradientMode::kExact) {
    if (options.covariance.rows() != dim || options.covariance.cols() != dim) {
      throw ConfigError("LinearizeTrajectory: covariance must be (n+m)x(n+m)");
    }
    if (options.sample_count < 1) {
      throw ConfigError("LinearizeTrajectory: sample_count must be >= 1");
    }
    if (options.mode == GradientMode::kZeroOrder &&
        options.sample_count < dim) {
      throw ConfigError(
          "LinearizeTrajectory: zero-order mode needs sample_count >= n+m");
    }
    dist.emplace(options.covariance);
  }

  std::vector<systems::LinearizedDynamics> models(T);
  ParallelFor(T, options.jobs, [&](int t) {
    if (options.mode == GradientMode::kExact) {
      models[t] = systems::LinearizeExact(system, xs[t], us[t]);
      return;
    }
    const std::uint64_t seed = DeriveSeed(
        options.seed, {static_cast<std::uint64_t>(options.iteration),
                       static_cast<std::uint64_t>(t)});
    const smoothing::JacobianBundle bundle =
        options.mode == GradientMode::kFirstOrder
            ? smoothing::FirstOrderJacobianBundle(system, xs[t], us[t], *dist,
                                                  options.sample_count, seed)
            : smoothing::ZeroOrderJacobianBundle(system, xs[t], us[t], *dist,
                                                 options.sample_count, seed);
    models[t] = systems::MakeAffineModel(system, xs[t], us[t], bundle.A,
                                         bundle.B);
  });
  return models;
}

IrsLqrResult RunIrsLqr(const systems::DynamicalSystem& system,
                       const MpcSpec& spec, const VectorXd& x0,
                       const std::vector<VectorXd>& initial_inputs,
                       const IrsLqrOptions& options) {
  const int T = spec.horizon();
  if (static_cast<int>(initial_inputs.size()) != T) {
    throw ConfigError("RunIrsLqr: need one initial input per step");
  }
  if (spec.state_dim() != system.state_dim() ||
      spec.input_dim() != system.input_dim()) {
    throw ConfigError("RunIrsLqr: cost and system dimensions differ");
  }
  if (options.max_iterations < 0) {
    throw ConfigError("RunIrsLqr: max_iterations must be >= 0");
  }

  IrsLqrResult result;
  result.inputs = initial_inputs;
  result.states = systems::Rollout(system, x0, result.inputs);
  result.history.push_back(
      {0, TrajectoryCost(spec, result.states, result.inputs), 0, 0.0});

  int small_changes = 0;
  int increases = 0;
  for (int k = 0; k < options.max_iterations; ++k) {
    LinearizationOptions lin;
    lin.mode = options.mode;
    lin.sample_count = options.sample_count;
    lin.seed = options.seed;
    lin.iteration = k;
    lin.jobs = options.jobs;
    const double factor = options.schedule.Factor(k);
    if (options.mode != GradientMode::kExact) {
      lin.covariance = options.schedule.Apply(options.covariance0, k);
    }
    const std::vector<systems::LinearizedDynamics> models =
        LinearizeTrajectory(system, result.states, result.inputs, lin);

    std::vector<VectorXd> xs(T + 1), us(T);
    xs[0] = x0;
    int relaxed = 0;
    for (int t = 0; t < T; ++t) {
      const MpcSolution mpc = SolveMpc(spec, t, xs[t], models);
      relaxed += mpc.relaxed;
      us[t] = mpc.u;
      xs[t + 1] = system.Step(xs[t], us[t]);
    }
    const double cost = TrajectoryCost(spec, xs, us);
    const double previous = result.history.back().cost;
    result.history.push_back(
        {k + 1, cost, relaxed,
         options.mode == GradientMode::kExact ? 0.0 : factor});
    result.states = std::move(xs);
    result.inputs = std::move(us);

    if (!std::isfinite(cost)) {
      result.diverged = true;
      break;
    }
    const double change = std::abs(cost - previous) /
                          std::max(std::abs(previous), 1e-300);
    small_changes = change < options.convergence_tolerance ? small_changes + 1
                                                           : 0;
    increases = cost > previous ? increases + 1 : 0;
    if (small_changes >= options.convergence_window) {
      result.converged = true;
      break;
    }
    if (increases >= options.divergence_window) {
      result.diverged = true;
      break;
    }
  }
  return result;
}

std::vector<ComparisonRow> RunComparison(
    const systems::DynamicalSystem& system, const MpcSpec& spec,
    const VectorXd& x0, const std::vector<VectorXd>& initial_inputs,
    const std::vector<GradientMode>& modes,
    const std::vector<std::uint64_t>& seeds, const IrsLqrOptions& options) {
  std::vector<ComparisonRow> rows;
  for (GradientMode mode : modes) {
    for (std::uint64_t seed : seeds) rows.push_back({mode, seed, {}});
  }
  ParallelFor(static_cast<int>(rows.size()), options.jobs, [&](int i) {
    IrsLqrOptions run = options;
    run.mode = rows[i].mode;
    run.seed = rows[i].seed;
    run.jobs = 1;
    rows[i].result = RunIrsLqr(system, spec, x0, initial_inputs, run);
  });
  return rows;
}

}  // namespace bundleopt::irs_lqr
