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
#include "bundleopt/qp/qp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bundleopt/common/error.h"
#include "bundleopt/common/linalg.h"

namespace bundleopt::qp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Plane rotation that maps (a, b) to (r, 0).
struct Givens {
  double c = 1.0;
  double s = 0.0;
  double r = 0.0;

  static Givens Zeroing(double a, double b) {
    Givens g;
    g.r = std::hypot(a, b);
    if (g.r > 0.0) {
      g.c = a / g.r;
      g.s = b / g.r;
    }
    return g;
  }
};

void RotateColumns(MatrixXd& J, int i, int j, const Givens& g) {
  for (Eigen::Index row = 0; row < J.rows(); ++row) {
    const double a = J(row, i);
    const double b = J(row, j);
    J(row, i) = g.c * a + g.s * b;
    J(row, j) = -g.s * a + g.c * b;
  }
}

// Working set of the dual method. Constraints are stored in the form
// n'z >= b0; the factorization keeps J'N = [R; 0] with J'PJ = I, where N
// holds the normals of the active constraints.
class WorkingSet {
 public:
  explicit WorkingSet(const MatrixXd& J)
      : J_(J), R_(MatrixXd::Zero(J.cols(), J.cols())) {}

  int size() const { return q_; }
  const MatrixXd& J() const { return J_; }

  // Step directions for adding normal n: primal z = J2 d2, dual r = R^-1 d1.
  void Directions(const VectorXd& n, VectorXd& d, VectorXd& z,
                  VectorXd& r) const {
    const int dim = static_cast<int>(J_.cols());
    d = J_.transpose() * n;
    z = J_.rightCols(dim - q_) * d.tail(dim - q_);
    r = R_.topLeftCorner(q_, q_).triangularView<Eigen::Upper>().solve(
        d.head(q_));
  }

  // Appends the constraint whose transformed normal is d (= J'n).
  void Add(VectorXd d) {
    const int dim = static_cast<int>(J_.cols());
    for (int j = dim - 1; j > q_; --j) {
      const Givens g = Givens::Zeroing(d[j - 1], d[j]);
      if (g.s == 0.0) continue;
      d[j - 1] = g.r;
      d[j] = 0.0;
      RotateColumns(J_, j - 1, j, g);
    }
    R_.col(q_).head(q_ + 1) = d.head(q_ + 1);
    ++q_;
  }

  // Removes the constraint at working-set position l.
  void Remove(int l) {
    for (int k = l; k + 1 < q_; ++k) R_.col(k) = R_.col(k + 1);
    R_.col(q_ - 1).setZero();
    // Columns l..q-2 are now upper Hessenberg; restore triangularity.
    for (int j = l; j + 1 < q_; ++j) {
      const Givens g = Givens::Zeroing(R_(j, j), R_(j + 1, j));
      if (g.s == 0.0) continue;
      for (int k = j; k + 1 < q_; ++k) {
        const double a = R_(j, k);
        const double b = R_(j + 1, k);
        R_(j, k) = g.c * a + g.s * b;
        R_(j + 1, k) = -g.s * a + g.c * b;
      }
      R_(j + 1, j) = 0.0;
      RotateColumns(J_, j, j + 1, g);
    }
    --q_;
  }

 private:
  MatrixXd J_;
  MatrixXd R_;
  int q_ = 0;
};

}  // namespace

QpProblem::QpProblem(MatrixXd P, VectorXd q, MatrixXd G, VectorXd h,
                     MatrixXd A_eq, VectorXd b_eq)
    : P_(std::move(P)),
      q_(std::move(q)),
      G_(std::move(G)),
      h_(std::move(h)),
      A_eq_(std::move(A_eq)),
      b_eq_(std::move(b_eq)) {
  const Eigen::Index n = q_.size();
  if (n == 0) throw ConfigError("QpProblem: no decision variables");
  if (P_.rows() != n || P_.cols() != n) {
    std::ostringstream msg;
    msg << "QpProblem: P is " << P_.rows() << "x" << P_.cols()
        << " but q has " << n << " entries";
    throw ConfigError(msg.str());
  }
  CheckPositiveDefinite(P_, "QpProblem P");
  if (G_.size() == 0) G_.resize(h_.size(), n);
  if (A_eq_.size() == 0) A_eq_.resize(b_eq_.size(), n);
  if (G_.rows() != h_.size() || G_.cols() != n) {
    std::ostringstream msg;
    msg << "QpProblem: G is " << G_.rows() << "x" << G_.cols()
        << ", expected " << h_.size() << "x" << n;
    throw ConfigError(msg.str());
  }
  if (A_eq_.rows() != b_eq_.size() || A_eq_.cols() != n) {
    std::ostringstream msg;
    msg << "QpProblem: A_eq is " << A_eq_.rows() << "x" << A_eq_.cols()
        << ", expected " << b_eq_.size() << "x" << n;
    throw ConfigError(msg.str());
  }
  if (!P_.allFinite() || !q_.allFinite() || !G_.allFinite() ||
      !h_.allFinite() || !A_eq_.allFinite() || !b_eq_.allFinite()) {
    throw ConfigError("QpProblem: non-finite data");
  }
}

double QpProblem::Objective(const VectorXd& z) const {
  return 0.5 * z.dot(P_ * z) + q_.dot(z);
}

std::string_view ToString(QpStatus status) {
  switch (status) {
    case QpStatus::kOptimal:
      return "optimal";
    case QpStatus::kInfeasible:
      return "infeasible";
    case QpStatus::kMaxIterations:
      return "max_iter";
  }
  return "unknown";
}

QpSolution SolveQp(const QpProblem& problem, const QpOptions& options) {
  const int n = problem.num_variables();
  const int m = problem.num_inequalities();
  const int meq = problem.num_equalities();
  const int max_iterations = options.max_iterations > 0
                                 ? options.max_iterations
                                 : 20 * (n + m + meq) + 100;

  Eigen::LLT<MatrixXd> llt(problem.P());
  if (llt.info() != Eigen::Success) {
    throw NumericalError("SolveQp: Cholesky factorization of P failed");
  }
  // J = L^-T, so that J'PJ = I.
  const MatrixXd L = llt.matrixL();
  MatrixXd J = L.triangularView<Eigen::Lower>().transpose().solve(
      MatrixXd::Identity(n, n));
  WorkingSet work(J);

  QpSolution sol;
  sol.z = -llt.solve(problem.q());
  sol.lambda = VectorXd::Zero(m);
  sol.nu = VectorXd::Zero(meq);

  // Constraint c in [0, meq) is equality row c; c >= meq is inequality row
  // c - meq. Both are written as n'z >= b0.
  const auto normal = [&](int c) -> VectorXd {
    if (c < meq) return problem.A_eq().row(c).transpose();
    return -problem.G().row(c - meq).transpose();
  };
  const auto bound = [&](int c) {
    return c < meq ? problem.b_eq()[c] : -problem.h()[c - meq];
  };
  const auto slack = [&](int c) { return normal(c).dot(sol.z) - bound(c); };

  std::vector<int> active;     // constraint ids in working-set order
  std::vector<double> u;       // their multipliers
  std::vector<char> in_set(meq + m, 0);

  VectorXd d, step, r;
  int iterations = 0;

  // Adds constraint p, dropping blocking inequalities as needed. Returns
  // false when no step can make p satisfied (the problem is infeasible).
  const auto add_constraint = [&](int p) -> bool {
    const bool equality = p < meq;
    const VectorXd np = normal(p);
    double u_p = 0.0;
    while (true) {
      if (++iterations > max_iterations) return true;
      work.Directions(np, d, step, r);
      const int q = work.size();

      // Partial step: largest dual step keeping inequality multipliers >= 0.
      double t1 = kInf;
      int blocking = -1;
      for (int j = 0; j < q; ++j) {
        if (active[j] < meq || r[j] <= 0.0) continue;
        const double ratio = u[j] / r[j];
        if (ratio < t1) {
          t1 = ratio;
          blocking = j;
        }
      }
      // Full step: primal step that makes p active.
      const double curvature = d.tail(n - q).squaredNorm();
      const bool has_primal_step = curvature > 1e-14 * d.squaredNorm();
      double t2 = kInf;
      if (has_primal_step) t2 = -slack(p) / step.dot(np);

      if (!has_primal_step && (equality || blocking < 0)) return false;

      if (!has_primal_step || (!equality && t1 < t2)) {
        // Drop the blocking constraint and retry with the same p.
        for (int j = 0; j < q; ++j) u[j] -= t1 * r[j];
        u_p += t1;
        in_set[active[blocking]] = 0;
        active.erase(active.begin() + blocking);
        u.erase(u.begin() + blocking);
        work.Remove(blocking);
        if (has_primal_step) sol.z += t1 * step;
        continue;
      }
      sol.z += t2 * step;
      for (int j = 0; j < q; ++j) u[j] -= t2 * r[j];
      u_p += t2;
      work.Add(d);
      active.push_back(p);
      u.push_back(u_p);
      in_set[p] = 1;
      return true;
    }
  };

  const auto finish = [&](QpStatus status) {
    sol.status = status;
    sol.iterations = iterations;
    for (size_t j = 0; j < active.size(); ++j) {
      const int c = active[j];
      if (c < meq) {
        sol.nu[c] = -u[j];
      } else {
        sol.lambda[c - meq] = u[j];
        sol.active_set.push_back(c - meq);
      }
    }
    std::sort(sol.active_set.begin(), sol.active_set.end());
    sol.objective = problem.Objective(sol.z);
    sol.kkt_residual = KktResidual(problem, sol);
    return sol;
  };

  for (int c = 0; c < meq; ++c) {
    if (!add_constraint(c)) return finish(QpStatus::kInfeasible);
    if (iterations > max_iterations) return finish(QpStatus::kMaxIterations);
  }

  while (true) {
    int worst = -1;
    double worst_violation = 0.0;
    for (int i = 0; i < m; ++i) {
      const int c = meq + i;
      if (in_set[c]) continue;
      const double violation = -slack(c);
      const double tol =
          options.feasibility_tolerance * std::max(1.0, std::abs(bound(c)));
      if (violation > tol && violation > worst_violation) {
        worst_violation = violation;
        worst = c;
      }
    }
    if (worst < 0) return finish(QpStatus::kOptimal);
    if (!add_constraint(worst)) return finish(QpStatus::kInfeasible);
    if (iterations > max_iterations) return finish(QpStatus::kMaxIterations);
  }
}

double KktResidual(const QpProblem& problem, const VectorXd& z,
                   const VectorXd& lambda, const VectorXd& nu) {
  if (z.size() != problem.num_variables() ||
      lambda.size() != problem.num_inequalities() ||
      nu.size() != problem.num_equalities()) {
    throw ConfigError("KktResidual: dimension mismatch");
  }
  const VectorXd gradient = problem.P() * z + problem.q() +
                            problem.G().transpose() * lambda +
                            problem.A_eq().transpose() * nu;
  double residual = gradient.lpNorm<Eigen::Infinity>();
  if (problem.num_inequalities() > 0) {
    const VectorXd g = problem.G() * z - problem.h();
    residual = std::max(residual, g.maxCoeff());
    residual = std::max(residual, (-lambda).maxCoeff());
    residual = std::max(residual,
                        lambda.cwiseProduct(g).lpNorm<Eigen::Infinity>());
  }
  if (problem.num_equalities() > 0) {
    residual = std::max(
        residual,
        (problem.A_eq() * z - problem.b_eq()).lpNorm<Eigen::Infinity>());
  }
  return std::max(residual, 0.0);
}

double KktResidual(const QpProblem& problem, const QpSolution& solution) {
  return KktResidual(problem, solution.z, solution.lambda, solution.nu);
}

}  // namespace bundleopt::qp
