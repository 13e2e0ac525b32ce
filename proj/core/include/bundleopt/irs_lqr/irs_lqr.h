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
#ifndef BUNDLEOPT_IRS_LQR_IRS_LQR_H_
#define BUNDLEOPT_IRS_LQR_IRS_LQR_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "bundleopt/irs_lqr/mpc.h"
#include "bundleopt/smoothing/schedule.h"
#include "bundleopt/systems/dynamical_system.h"

namespace bundleopt::irs_lqr {

// How the per-knot models (A_t, B_t) are obtained.
enum class GradientMode { kExact, kFirstOrder, kZeroOrder };

std::string_view ToString(GradientMode mode);
// Accepts "exact", "first_order" / "first_order_bundle" and "zero_order" /
// "zero_order_bundle". Throws ConfigError.
GradientMode ParseGradientMode(std::string_view name);

struct LinearizationOptions {
  GradientMode mode = GradientMode::kExact;
  int sample_count = 100;
  // Joint covariance over (x, u), state block first.
  MatrixXd covariance;
  std::uint64_t seed = 0;
  // Outer iteration; part of every knot's sample seed.
  int iteration = 0;
  int jobs = 1;
};

// Affine models around every knot (xs[t], us[t]), t < T. Bundle modes draw
// their samples for knot t from DeriveSeed(seed, {iteration, t}); the
// output does not depend on jobs.
std::vector<systems::LinearizedDynamics> LinearizeTrajectory(
    const systems::DynamicalSystem& system, const std::vector<VectorXd>& xs,
    const std::vector<VectorXd>& us, const LinearizationOptions& options);

// Covariance blockdiag(0_n, sigma^2 I_m): perturb the inputs only.
MatrixXd InputOnlyCovariance(int state_dim, int input_dim, double sigma);

struct IrsLqrOptions {
  GradientMode mode = GradientMode::kExact;
  int sample_count = 100;
  // Sigma_0 over (x, u); required for bundle modes.
  MatrixXd covariance0;
  smoothing::VarianceSchedule schedule = smoothing::VarianceSchedule::Constant();
  int max_iterations = 20;
  // Stop once the relative cost change stays below this for
  // convergence_window consecutive iterations.
  double convergence_tolerance = 1e-6;
  int convergence_window = 3;
  // Abort after this many consecutive cost increases.
  int divergence_window = 5;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct IterationRecord {
  // 0 is the initial rollout.
  int iteration = 0;
  double cost = 0.0;
  // MPC subproblems of this forward pass whose state constraints were
  // relaxed.
  int relaxed_mpc_steps = 0;
  // Sigma_k / Sigma_0 used to build the models of this iteration.
  double variance_factor = 0.0;
};

struct IrsLqrResult {
  std::vector<IterationRecord> history;
  std::vector<VectorXd> states;
  std::vector<VectorXd> inputs;
  bool converged = false;
  bool diverged = false;

  double initial_cost() const { return history.front().cost; }
  double final_cost() const { return history.back().cost; }
};

// Iterative LQR with Jacobian bundles. Each iteration linearizes the current
// trajectory (all knots, variance Sigma_k = schedule(Sigma_0, k)), then runs
// a forward pass that applies u_t = MPC(x_t) from the shrinking-horizon
// subproblem at every step on the true system. There is no line search: a
// run that increases its cost divergence_window times in a row stops and
// reports diverged.
IrsLqrResult RunIrsLqr(const systems::DynamicalSystem& system,
                       const MpcSpec& spec, const VectorXd& x0,
                       const std::vector<VectorXd>& initial_inputs,
                       const IrsLqrOptions& options);

struct ComparisonRow {
  GradientMode mode = GradientMode::kExact;
  std::uint64_t seed = 0;
  IrsLqrResult result;
};

// One run per (mode, seed), in mode-major order. Runs are independent and
// distributed over options.jobs threads; each run itself is sequential.
std::vector<ComparisonRow> RunComparison(
    const systems::DynamicalSystem& system, const MpcSpec& spec,
    const VectorXd& x0, const std::vector<VectorXd>& initial_inputs,
    const std::vector<GradientMode>& modes,
    const std::vector<std::uint64_t>& seeds, const IrsLqrOptions& options);

}  // namespace bundleopt::irs_lqr

#endif  // BUNDLEOPT_IRS_LQR_IRS_LQR_H_
