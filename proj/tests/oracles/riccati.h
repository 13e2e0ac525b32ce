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
#ifndef BUNDLEOPT_TESTS_ORACLES_RICCATI_H_
#define BUNDLEOPT_TESTS_ORACLES_RICCATI_H_

#include <vector>

#include <Eigen/Dense>

namespace bundleopt::testing {

struct LqrTrajectory {
  std::vector<Eigen::VectorXd> states;
  std::vector<Eigen::VectorXd> inputs;
  double cost = 0.0;
};

// Finite-horizon tracking LQR for x+ = A x + B u + c by backward Riccati
// recursion on V_t(x) = x'P_t x + 2 p_t'x, then a forward rollout. Cost is
// sum_t |x_t - xd_t|_Q^2 + |u_t|_R^2 plus |x_T - xd_T|_Qd^2.
inline LqrTrajectory SolveTrackingLqr(
    const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
    const Eigen::VectorXd& c, const Eigen::MatrixXd& Q,
    const Eigen::MatrixXd& R, const Eigen::MatrixXd& Qd,
    const std::vector<Eigen::VectorXd>& xd, const Eigen::VectorXd& x0) {
  const int T = static_cast<int>(xd.size()) - 1;
  std::vector<Eigen::MatrixXd> K(T);
  std::vector<Eigen::VectorXd> kff(T);
  Eigen::MatrixXd P = Qd;
  Eigen::VectorXd p = -Qd * xd[T];
  for (int t = T - 1; t >= 0; --t) {
    const Eigen::MatrixXd H = R + B.transpose() * P * B;
    const Eigen::VectorXd g = P * c + p;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(H);
    K[t] = ldlt.solve(B.transpose() * P * A);
    kff[t] = ldlt.solve(B.transpose() * g);
    const Eigen::MatrixXd Acl = A - B * K[t];
    p = -Q * xd[t] + Acl.transpose() * g;
    P = Q + A.transpose() * P * A - A.transpose() * P * B * K[t];
    P = 0.5 * (P + P.transpose());
  }

  LqrTrajectory out;
  out.states.push_back(x0);
  for (int t = 0; t < T; ++t) {
    const Eigen::VectorXd& x = out.states.back();
    Eigen::VectorXd u = -K[t] * x - kff[t];
    Eigen::VectorXd e = x - xd[t];
    out.cost += e.dot(Q * e) + u.dot(R * u);
    out.states.push_back(A * x + B * u + c);
    out.inputs.push_back(std::move(u));
  }
  Eigen::VectorXd e = out.states.back() - xd[T];
  out.cost += e.dot(Qd * e);
  return out;
}

}  // namespace bundleopt::testing

#endif  // BUNDLEOPT_TESTS_ORACLES_RICCATI_H_
