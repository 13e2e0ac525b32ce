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
#include "bundleopt/smoothing/distribution.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bundleopt/common/error.h"
#include "bundleopt/common/linalg.h"
#include "bundleopt/common/random.h"

namespace bundleopt::smoothing {
namespace {

// Eigenvalues below this fraction of the largest are treated as zero.
constexpr double kRankTolerance = 1e-12;

}  // namespace

GaussianDistribution::GaussianDistribution(MatrixXd covariance)
    : covariance_(std::move(covariance)) {
  if (covariance_.size() == 0) {
    throw ConfigError("GaussianDistribution: empty covariance");
  }
  CheckPositiveSemidefinite(covariance_, "covariance");
  covariance_ = 0.5 * (covariance_ + covariance_.transpose()).eval();
  const int d = dimension();

  const MatrixXd off_diagonal =
      covariance_ - MatrixXd(covariance_.diagonal().asDiagonal());
  is_diagonal_ = off_diagonal.cwiseAbs().maxCoeff() == 0.0;

  if (is_diagonal_) {
    const VectorXd variances = covariance_.diagonal().cwiseMax(0.0);
    factor_ = MatrixXd(variances.cwiseSqrt().asDiagonal());
    const double scale = variances.maxCoeff();
    int r = 0;
    for (int i = 0; i < d; ++i) r += variances[i] > kRankTolerance * scale;
    range_basis_ = MatrixXd::Zero(d, r);
    null_basis_ = MatrixXd::Zero(d, d - r);
    for (int i = 0, ri = 0, ni = 0; i < d; ++i) {
      if (variances[i] > kRankTolerance * scale && scale > 0) {
        range_basis_(i, ri++) = 1.0;
      } else {
        null_basis_(i, ni++) = 1.0;
      }
    }
    return;
  }

  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(covariance_);
  const VectorXd lambda = eig.eigenvalues().cwiseMax(0.0);
  const MatrixXd& vectors = eig.eigenvectors();
  factor_ = vectors * lambda.cwiseSqrt().asDiagonal();
  const double scale = lambda.maxCoeff();
  std::vector<int> range, null;
  for (int i = 0; i < d; ++i) {
    (scale > 0 && lambda[i] > kRankTolerance * scale ? range : null)
        .push_back(i);
  }
  range_basis_ = MatrixXd(d, range.size());
  null_basis_ = MatrixXd(d, null.size());
  for (size_t i = 0; i < range.size(); ++i) {
    range_basis_.col(i) = vectors.col(range[i]);
  }
  for (size_t i = 0; i < null.size(); ++i) {
    null_basis_.col(i) = vectors.col(null[i]);
  }
}

GaussianDistribution GaussianDistribution::Isotropic(int dimension,
                                                     double sigma) {
  if (dimension < 1 || !(sigma >= 0)) {
    throw ConfigError("Isotropic: need dimension >= 1 and sigma >= 0");
  }
  return GaussianDistribution(sigma * sigma *
                              MatrixXd::Identity(dimension, dimension));
}

GaussianDistribution GaussianDistribution::Diagonal(const VectorXd& sigmas) {
  if (sigmas.size() < 1 || !(sigmas.array() >= 0).all()) {
    throw ConfigError("Diagonal: need non-negative standard deviations");
  }
  return GaussianDistribution(
      MatrixXd(sigmas.array().square().matrix().asDiagonal()));
}

VectorXd GaussianDistribution::StandardDeviations() const {
  return covariance_.diagonal().cwiseMax(0.0).cwiseSqrt();
}

double GaussianDistribution::Density(const VectorXd& w) const {
  if (rank() != dimension()) {
    throw ConfigError("Density: covariance is singular");
  }
  Eigen::LLT<MatrixXd> llt(covariance_);
  const VectorXd y = llt.matrixL().solve(w);
  const double log_det = 2.0 * llt.matrixL().toDenseMatrix()
                                   .diagonal()
                                   .array()
                                   .log()
                                   .sum();
  const double d = dimension();
  return std::exp(-0.5 * y.squaredNorm() - 0.5 * log_det -
                  0.5 * d * std::log(2.0 * std::numbers::pi));
}

GaussianDistribution GaussianDistribution::Scaled(
    double variance_factor) const {
  if (!(variance_factor >= 0)) {
    throw ConfigError("Scaled: factor must be non-negative");
  }
  return GaussianDistribution(variance_factor * covariance_);
}

PerturbationBatch SamplePerturbations(const GaussianDistribution& dist, int n,
                                      std::uint64_t seed) {
  if (n < 1) throw ConfigError("SamplePerturbations: need n >= 1");
  const int d = dist.dimension();
  RandomEngine engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXd standard(d, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) standard(j, i) = normal(engine);
  }
  PerturbationBatch batch;
  batch.seed = seed;
  if (dist.is_diagonal()) {
    batch.samples = dist.factor().diagonal().asDiagonal() * standard;
  } else {
    batch.samples = dist.factor() * standard;
  }
  return batch;
}

}  // namespace bundleopt::smoothing
