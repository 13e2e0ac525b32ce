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
#include "bundleopt/irs_lqr/mpc.h"

#include <sstream>

#include "bundleopt/common/error.h"
#include "bundleopt/common/linalg.h"

namespace bundleopt::irs_lqr {
namespace {

void CheckShape(const MatrixXd& m, Eigen::Index rows, Eigen::Index cols,
                const char* what, int t) {
  if (m.rows() != rows || m.cols() != cols) {
    std::ostringstream msg;
    msg << "MpcSpec: " << what << "[" << t << "] is " << m.rows() << "x"
        << m.cols() << ", expected " << rows << "x" << cols;
    throw ConfigError(msg.str());
  }
}

void CheckConstraint(const LinearConstraint& c, Eigen::Index dim,
                     const char* what, int t) {
  if (c.C.rows() != c.d.size() || (c.d.size() > 0 && c.C.cols() != dim)) {
    std::ostringstream msg;
    msg << "MpcSpec: " << what << "[" << t << "] has C " << c.C.rows() << "x"
        << c.C.cols() << " and d of size " << c.d.size() << " for dimension "
        << dim;
    throw ConfigError(msg.str());
  }
}

}  // namespace

MpcSpec::MpcSpec(Terms terms) : terms_(std::move(terms)) {
  const int T = static_cast<int>(terms_.R.size());
  if (T < 1) throw ConfigError("MpcSpec: horizon must be at least 1");
  const Eigen::Index n = terms_.Qd.rows();
  const Eigen::Index m = terms_.R[0].rows();
  if (n < 1 || m < 1) throw ConfigError("MpcSpec: empty state or input");
  if (static_cast<int>(terms_.Q.size()) != T) {
    throw ConfigError("MpcSpec: need one Q per step");
  }
  if (static_cast<int>(terms_.x_desired.size()) != T + 1) {
    throw ConfigError("MpcSpec: need T+1 desired states");
  }
  CheckShape(terms_.Qd, n, n, "Qd", T);
  CheckPositiveSemidefinite(terms_.Qd, "MpcSpec Qd");
  for (int t = 0; t < T; ++t) {
    CheckShape(terms_.Q[t], n, n, "Q", t);
    CheckShape(terms_.R[t], m, m, "R", t);
    CheckPositiveSemidefinite(terms_.Q[t], "MpcSpec Q");
    CheckPositiveDefinite(terms_.R[t], "MpcSpec R");
  }
  for (int t = 0; t <= T; ++t) {
    if (terms_.x_desired[t].size() != n) {
      throw ConfigError("MpcSpec: desired state has wrong dimension");
    }
  }
  if (has_input_constraints()) {
    if (static_cast<int>(terms_.input_constraints.size()) != T) {
      throw ConfigError("MpcSpec: need one input constraint per step");
    }
    for (int t = 0; t < T; ++t) {
      CheckConstraint(terms_.input_constraints[t], m, "input_constraints", t);
    }
  }
  if (has_state_constraints()) {
    if (static_cast<int>(terms_.state_constraints.size()) != T + 1) {
      throw ConfigError("MpcSpec: need T+1 state constraints");
    }
    for (int t = 0; t <= T; ++t) {
      CheckConstraint(terms_.state_constraints[t], n, "state_constraints", t);
    }
  }
}

MpcSpec MpcSpec::TimeInvariant(int horizon, const MatrixXd& Q,
                               const MatrixXd& R, const MatrixXd& Qd,
                               const VectorXd& goal,
                               const LinearConstraint& input,
                               const LinearConstraint& state) {
  if (horizon < 1) throw ConfigError("MpcSpec: horizon must be at least 1");
  Terms terms;
  terms.Q.assign(horizon, Q);
  terms.R.assign(horizon, R);
  terms.Qd = Qd;
  terms.x_desired.assign(horizon + 1, goal);
  if (!input.empty()) terms.input_constraints.assign(horizon, input);
  if (!state.empty()) terms.state_constraints.assign(horizon + 1, state);
  return MpcSpec(std::move(terms));
}

double TrajectoryCost(const MpcSpec& spec, const std::vector<VectorXd>& xs,
                      const std::vector<VectorXd>& us) {
  const int T = spec.horizon();
  if (static_cast<int>(xs.size()) != T + 1 ||
      static_cast<int>(us.size()) != T) {
    throw ConfigError("TrajectoryCost: expected T+1 states and T inputs");
  }
  const MpcSpec::Terms& w = spec.terms();
  VectorXd e = xs[T] - w.x_desired[T];
  double cost = e.dot(w.Qd * e);
  for (int t = 0; t < T; ++t) {
    e = xs[t] - w.x_desired[t];
    cost += e.dot(w.Q[t] * e) + us[t].dot(w.R[t] * us[t]);
  }
  return cost;
}

MpcSolution SolveMpc(const MpcSpec& spec, int j, const VectorXd& x_j,
                     const std::vector<systems::LinearizedDynamics>& models) {
  const int T = spec.horizon();
  const int n = spec.state_dim();
  const int m = spec.input_dim();
  if (j < 0 || j >= T) throw ConfigError("SolveMpc: start index out of range");
  if (static_cast<int>(models.size()) < T) {
    throw ConfigError("SolveMpc: need one affine model per step");
  }
  if (x_j.size() != n) throw ConfigError("SolveMpc: initial state size");
  const MpcSpec::Terms& w = spec.terms();
  const int steps = T - j;
  const int nu = steps * m;

  // x_t = offset[t] + gain[t] * U with U = (u_j, ..., u_{T-1}).
  std::vector<VectorXd> offset(steps + 1);
  std::vector<MatrixXd> gain(steps + 1);
  offset[0] = x_j;
  gain[0] = MatrixXd::Zero(n, nu);
  for (int s = 0; s < steps; ++s) {
    const systems::LinearizedDynamics& f = models[j + s];
    if (f.A.rows() != n || f.A.cols() != n || f.B.rows() != n ||
        f.B.cols() != m || f.c.size() != n) {
      throw ConfigError("SolveMpc: affine model has wrong dimensions");
    }
    offset[s + 1] = f.A * offset[s] + f.c;
    gain[s + 1] = f.A * gain[s];
    gain[s + 1].middleCols(s * m, m) += f.B;
  }

  MatrixXd P = MatrixXd::Zero(nu, nu);
  VectorXd q = VectorXd::Zero(nu);
  double constant = 0.0;
  for (int s = 0; s <= steps; ++s) {
    const int t = j + s;
    const MatrixXd& W = t == T ? w.Qd : w.Q[t];
    const VectorXd e = offset[s] - w.x_desired[t];
    const MatrixXd WG = W * gain[s];
    P.noalias() += gain[s].transpose() * WG;
    q.noalias() += WG.transpose() * e;
    constant += e.dot(W * e);
    if (t < T) P.block(s * m, s * m, m, m) += w.R[t];
  }
  P = (P + P.transpose()).eval();  // factor 2 of the quadratic form
  q *= 2.0;

  // Input rows, then state rows for t = j+1..T.
  std::vector<std::pair<MatrixXd, VectorXd>> input_rows, state_rows;
  if (spec.has_input_constraints()) {
    for (int s = 0; s < steps; ++s) {
      const LinearConstraint& c = w.input_constraints[j + s];
      if (c.empty()) continue;
      MatrixXd G = MatrixXd::Zero(c.d.size(), nu);
      G.middleCols(s * m, m) = c.C;
      input_rows.emplace_back(std::move(G), c.d);
    }
  }
  if (spec.has_state_constraints()) {
    for (int s = 1; s <= steps; ++s) {
      const LinearConstraint& c = w.state_constraints[j + s];
      if (c.empty()) continue;
      state_rows.emplace_back(c.C * gain[s], c.d - c.C * offset[s]);
    }
  }
  const auto stack = [&](int extra_cols, bool slack_states) {
    Eigen::Index rows = 0;
    for (const auto& r : input_rows) rows += r.second.size();
    for (const auto& r : state_rows) rows += r.second.size();
    const Eigen::Index slack_rows = slack_states ? extra_cols : 0;
    MatrixXd G = MatrixXd::Zero(rows + slack_rows, nu + extra_cols);
    VectorXd h(rows + slack_rows);
    Eigen::Index r0 = 0, slack = 0;
    for (const auto& r : input_rows) {
      G.block(r0, 0, r.first.rows(), nu) = r.first;
      h.segment(r0, r.second.size()) = r.second;
      r0 += r.second.size();
    }
    for (const auto& r : state_rows) {
      G.block(r0, 0, r.first.rows(), nu) = r.first;
      h.segment(r0, r.second.size()) = r.second;
      if (slack_states) {
        for (Eigen::Index i = 0; i < r.second.size(); ++i) {
          G(r0 + i, nu + slack + i) = -1.0;
        }
        slack += r.second.size();
      }
      r0 += r.second.size();
    }
    for (Eigen::Index i = 0; i < slack_rows; ++i) {
      G(r0 + i, nu + i) = -1.0;  // slack >= 0
      h[r0 + i] = 0.0;
    }
    return std::pair{G, h};
  };

  MpcSolution out;
  out.num_dynamics_constraints = steps;
  auto [G, h] = stack(0, false);
  qp::QpSolution sol = qp::SolveQp(qp::QpProblem(P, q, G, h));
  VectorXd U;
  if (sol.optimal()) {
    U = sol.z;
    out.objective = sol.objective + constant;
  } else if (sol.status == qp::QpStatus::kInfeasible && !state_rows.empty()) {
    Eigen::Index num_slack = 0;
    for (const auto& r : state_rows) num_slack += r.second.size();
    MatrixXd P2 = MatrixXd::Zero(nu + num_slack, nu + num_slack);
    P2.topLeftCorner(nu, nu) = P;
    P2.bottomRightCorner(num_slack, num_slack) =
        2.0 * kStateSlackWeight * MatrixXd::Identity(num_slack, num_slack);
    VectorXd q2 = VectorXd::Zero(nu + num_slack);
    q2.head(nu) = q;
    auto [G2, h2] = stack(static_cast<int>(num_slack), true);
    sol = qp::SolveQp(qp::QpProblem(P2, q2, G2, h2));
    if (!sol.optimal()) {
      throw NumericalError("SolveMpc: relaxed subproblem returned " +
                           std::string(qp::ToString(sol.status)));
    }
    U = sol.z.head(nu);
    out.relaxed = true;
    out.objective = sol.objective + constant;
  } else {
    std::ostringstream msg;
    msg << "SolveMpc: subproblem at step " << j << " returned "
        << qp::ToString(sol.status);
    throw NumericalError(msg.str());
  }
  out.status = sol.status;

  out.inputs.resize(steps);
  for (int s = 0; s < steps; ++s) out.inputs[s] = U.segment(s * m, m);
  out.u = out.inputs[0];
  out.predicted_states.resize(steps + 1);
  for (int s = 0; s <= steps; ++s) {
    out.predicted_states[s] = offset[s] + gain[s] * U;
  }
  return out;
}

}  // namespace bundleopt::irs_lqr
