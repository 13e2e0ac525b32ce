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
#ifndef BUNDLEOPT_QP_QP_H_
#define BUNDLEOPT_QP_QP_H_

#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace bundleopt::qp {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// minimize 1/2 z'Pz + q'z  subject to  Gz <= h,  A_eq z = b_eq.
//
// The constructor checks dimensions and that P is symmetric with smallest
// eigenvalue above 1e-9; violations throw ConfigError. Empty G/A_eq mean no
// constraints of that kind.
class QpProblem {
 public:
  QpProblem(MatrixXd P, VectorXd q, MatrixXd G = MatrixXd(),
            VectorXd h = VectorXd(), MatrixXd A_eq = MatrixXd(),
            VectorXd b_eq = VectorXd());

  const MatrixXd& P() const { return P_; }
  const VectorXd& q() const { return q_; }
  const MatrixXd& G() const { return G_; }
  const VectorXd& h() const { return h_; }
  const MatrixXd& A_eq() const { return A_eq_; }
  const VectorXd& b_eq() const { return b_eq_; }

  int num_variables() const { return static_cast<int>(q_.size()); }
  int num_inequalities() const { return static_cast<int>(h_.size()); }
  int num_equalities() const { return static_cast<int>(b_eq_.size()); }

  double Objective(const VectorXd& z) const;

 private:
  MatrixXd P_;
  VectorXd q_;
  MatrixXd G_;
  VectorXd h_;
  MatrixXd A_eq_;
  VectorXd b_eq_;
};

enum class QpStatus { kOptimal, kInfeasible, kMaxIterations };

std::string_view ToString(QpStatus status);

struct QpOptions {
  // Active-set changes allowed before giving up; 0 selects a limit from the
  // problem size.
  int max_iterations = 0;
  // A constraint counts as violated when Gz - h exceeds this times
  // max(1, |h_i|).
  double feasibility_tolerance = 1e-11;
};

struct QpSolution {
  QpStatus status = QpStatus::kInfeasible;
  VectorXd z;
  // Inequality multipliers, one per row of G; zero for inactive rows.
  VectorXd lambda;
  // Equality multipliers: Pz + q + G'lambda + A_eq'nu = 0 at the optimum.
  VectorXd nu;
  double objective = 0.0;
  double kkt_residual = 0.0;
  int iterations = 0;
  // Indices of inequality rows in the final working set.
  std::vector<int> active_set;

  bool optimal() const { return status == QpStatus::kOptimal; }
};

// Goldfarb-Idnani dual active-set method. Starts from the unconstrained
// minimizer and adds violated constraints one at a time while keeping dual
// feasibility, so every intermediate point is optimal for a subset of the
// constraints. Infeasibility is reported as a status, never thrown.
QpSolution SolveQp(const QpProblem& problem, const QpOptions& options = {});

// Largest of: stationarity |Pz + q + G'lambda + A_eq'nu|_inf, primal
// violation max(Gz - h, |A_eq z - b_eq|), dual violation max(-lambda), and
// complementarity max |lambda_i (Gz - h)_i|.
double KktResidual(const QpProblem& problem, const VectorXd& z,
                   const VectorXd& lambda, const VectorXd& nu);
double KktResidual(const QpProblem& problem, const QpSolution& solution);

}  // namespace bundleopt::qp

#endif  // BUNDLEOPT_QP_QP_H_
