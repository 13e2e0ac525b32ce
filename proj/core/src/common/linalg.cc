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
#include "bundleopt/common/linalg.h"

#include <cmath>
#include <sstream>
#include <string>

#include "bundleopt/common/error.h"

namespace bundleopt {

void CheckSymmetric(const MatrixXd& m, std::string_view name) {
  if (m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << name << " must be square, got " << m.rows() << "x" << m.cols();
    throw ConfigError(msg.str());
  }
  if (!m.allFinite()) {
    throw ConfigError(std::string(name) + " has non-finite entries");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw ConfigError(std::string(name) + " must be symmetric");
  }
}

double MinEigenvalue(const MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  const MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

void CheckPositiveSemidefinite(const MatrixXd& m, std::string_view name) {
  CheckSymmetric(m, name);
  if (m.size() == 0) return;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double min_eig = MinEigenvalue(m);
  if (min_eig < -1e-12 * scale) {
    std::ostringstream msg;
    msg << name << " must be positive semidefinite (min eigenvalue "
        << min_eig << ")";
    throw ConfigError(msg.str());
  }
}

void CheckPositiveDefinite(const MatrixXd& m, std::string_view name,
                           double min_eigenvalue) {
  CheckSymmetric(m, name);
  if (m.size() == 0) return;
  const double min_eig = MinEigenvalue(m);
  if (!(min_eig > min_eigenvalue)) {
    std::ostringstream msg;
    msg << name << " must be positive definite (min eigenvalue " << min_eig
        << ")";
    throw ConfigError(msg.str());
  }
}

}  // namespace bundleopt
