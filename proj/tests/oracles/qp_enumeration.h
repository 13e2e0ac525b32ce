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
#ifndef BUNDLEOPT_TESTS_ORACLES_QP_ENUMERATION_H_
#define BUNDLEOPT_TESTS_ORACLES_QP_ENUMERATION_H_

#include <limits>
#include <optional>

#include <Eigen/Dense>

#include "bundleopt/qp/qp.h"

namespace bundleopt::testing {

struct EnumeratedQp {
  Eigen::VectorXd z;
  Eigen::VectorXd lambda;
  double objective = std::numeric_limits<double>::infinity();
};

// Brute-force reference: for every subset S of inequality rows, solve the
// KKT system with S (and all equalities) held active, keep primal-feasible
// candidates with nonnegative multipliers, and return the one with the
// lowest objective. Exponential in the number of rows; m <= 10 or so.
inline std::optional<EnumeratedQp> EnumerateActiveSets(
    const qp::QpProblem& p, double feasibility_tol = 1e-9) {
  const int n = p.num_variables();
  const int m = p.num_inequalities();
  const int meq = p.num_equalities();
  std::optional<EnumeratedQp> best;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const int k = __builtin_popcount(mask);
    const int rows = meq + k;
    Eigen::MatrixXd C(rows, n);
    Eigen::VectorXd b(rows);
    C.topRows(meq) = p.A_eq();
    b.head(meq) = p.b_eq();
    int r = meq;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        C.row(r) = p.G().row(i);
        b[r] = p.h()[i];
        ++r;
      }
    }
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n + rows, n + rows);
    K.topLeftCorner(n, n) = p.P();
    K.topRightCorner(n, rows) = C.transpose();
    K.bottomLeftCorner(rows, n) = C;
    Eigen::VectorXd rhs(n + rows);
    rhs << -p.q(), b;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(K);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd sol = lu.solve(rhs);
    const Eigen::VectorXd z = sol.head(n);
    const Eigen::VectorXd mult = sol.tail(rows);

    if (m > 0 && (p.G() * z - p.h()).maxCoeff() > feasibility_tol) continue;
    if (k > 0 && mult.tail(k).minCoeff() < -feasibility_tol) continue;
    const double obj = p.Objective(z);
    if (!best || obj < best->objective) {
      EnumeratedQp e;
      e.z = z;
      e.objective = obj;
      e.lambda = Eigen::VectorXd::Zero(m);
      r = 0;
      for (int i = 0; i < m; ++i) {
        if (mask & (1u << i)) e.lambda[i] = mult[meq + r++];
      }
      best = e;
    }
  }
  return best;
}

}  // namespace bundleopt::testing

#endif  // BUNDLEOPT_TESTS_ORACLES_QP_ENUMERATION_H_
