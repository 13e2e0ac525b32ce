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
#ifndef BUNDLEOPT_IRS_LQR_MPC_H_
#define BUNDLEOPT_IRS_LQR_MPC_H_

#include <vector>

#include <Eigen/Dense>

#include "bundleopt/qp/qp.h"
#include "bundleopt/systems/dynamical_system.h"

namespace bundleopt::irs_lqr {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// C v <= d. An empty constraint has zero rows.
struct LinearConstraint {
  MatrixXd C;
  VectorXd d;

  bool empty() const { return d.size() == 0; }
};

// Finite-horizon tracking problem
//   |x_T - xd_T|^2_Qd + sum_{t<T} |x_t - xd_t|^2_Q_t + |u_t|^2_R_t
// (|e|^2_W = e'We) with optional per-step input and state inequalities.
// Running terms have T entries, desired states and state constraints T+1.
class MpcSpec {
 public:
  struct Terms {
    std::vector<MatrixXd> Q;
    std::vector<MatrixXd> R;
    MatrixXd Qd;
    std::vector<VectorXd> x_desired;
    // Empty, or one entry per step.
    std::vector<LinearConstraint> input_constraints;
    std::vector<LinearConstraint> state_constraints;
  };

  // Throws ConfigError on inconsistent sizes, Q/Qd not PSD or R not PD.
  explicit MpcSpec(Terms terms);

  // Same weights and constraints at every step, fixed goal state.
  static MpcSpec TimeInvariant(int horizon, const MatrixXd& Q,
                               const MatrixXd& R, const MatrixXd& Qd,
                               const VectorXd& goal,
                               const LinearConstraint& input = {},
                               const LinearConstraint& state = {});

  int horizon() const { return static_cast<int>(terms_.R.size()); }
  int state_dim() const { return static_cast<int>(terms_.Qd.rows()); }
  int input_dim() const { return static_cast<int>(terms_.R[0].rows()); }
  const Terms& terms() const { return terms_; }

  bool has_input_constraints() const {
    return !terms_.input_constraints.empty();
  }
  bool has_state_constraints() const {
    return !terms_.state_constraints.empty();
  }

 private:
  Terms terms_;
};

// Objective of a full trajectory: xs has T+1 states, us T inputs.
double TrajectoryCost(const MpcSpec& spec, const std::vector<VectorXd>& xs,
                      const std::vector<VectorXd>& us);

// Penalty per unit squared slack when state inequalities must be relaxed.
inline constexpr double kStateSlackWeight = 1e6;

struct MpcSolution {
  // First optimal input u*_j.
  VectorXd u;
  // All inputs u_j..u_{T-1} and the predicted states x_j..x_T.
  std::vector<VectorXd> inputs;
  std::vector<VectorXd> predicted_states;
  // Dynamics relations x_{t+1} = A_t x_t + B_t u_t + c_t in the subproblem,
  // always T - j.
  int num_dynamics_constraints = 0;
  // True when the state inequalities were infeasible and had to be relaxed.
  bool relaxed = false;
  double objective = 0.0;
  qp::QpStatus status = qp::QpStatus::kOptimal;
};

// Solves the receding-horizon subproblem that starts from x_j at step j
// using the affine models models[j..T-1]. The dynamics are eliminated by
// substitution (states are affine in the inputs), which leaves a QP in the
// inputs alone whose Hessian is positive definite because every R_t is.
// State constraints at t = j involve only the fixed initial state and are
// skipped. If the QP is infeasible and state constraints exist, they are
// softened with slacks penalized by kStateSlackWeight and the result is
// flagged; any other failure throws NumericalError.
MpcSolution SolveMpc(const MpcSpec& spec, int j, const VectorXd& x_j,
                     const std::vector<systems::LinearizedDynamics>& models);

}  // namespace bundleopt::irs_lqr

#endif  // BUNDLEOPT_IRS_LQR_MPC_H_
