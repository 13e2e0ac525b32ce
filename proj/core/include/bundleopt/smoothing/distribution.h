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
#ifndef BUNDLEOPT_SMOOTHING_DISTRIBUTION_H_
#define BUNDLEOPT_SMOOTHING_DISTRIBUTION_H_

#include <cstdint>

#include <Eigen/Dense>

namespace bundleopt::smoothing {

using Eigen::MatrixXd;
using Eigen::VectorXd;

enum class DistributionKind { kGaussian };

// Zero-mean Gaussian perturbation density N(0, covariance). The covariance
// may be singular; sampled perturbations then live in its range, and the
// estimators treat the null space as unperturbed.
class GaussianDistribution {
 public:
  // Throws ConfigError unless covariance is symmetric PSD and non-empty.
  explicit GaussianDistribution(MatrixXd covariance);

  static GaussianDistribution Isotropic(int dimension, double sigma);
  // Independent coordinates with the given standard deviations.
  static GaussianDistribution Diagonal(const VectorXd& sigmas);

  DistributionKind kind() const { return DistributionKind::kGaussian; }
  int dimension() const { return static_cast<int>(covariance_.rows()); }
  const MatrixXd& covariance() const { return covariance_; }
  bool is_diagonal() const { return is_diagonal_; }

  // Square-root factor with factor * factor^T = covariance.
  const MatrixXd& factor() const { return factor_; }

  // Orthonormal bases of range(covariance) and of its complement. For a
  // diagonal covariance these are coordinate axes.
  const MatrixXd& range_basis() const { return range_basis_; }
  const MatrixXd& null_basis() const { return null_basis_; }
  int rank() const { return static_cast<int>(range_basis_.cols()); }

  // Marginal standard deviation of each coordinate.
  VectorXd StandardDeviations() const;

  // Density of N(0, covariance) at w; requires full rank.
  double Density(const VectorXd& w) const;

  GaussianDistribution Scaled(double variance_factor) const;

 private:
  MatrixXd covariance_;
  MatrixXd factor_;
  MatrixXd range_basis_;
  MatrixXd null_basis_;
  bool is_diagonal_ = false;
};

// N i.i.d. draws stored column-wise (dimension x count).
struct PerturbationBatch {
  MatrixXd samples;
  std::uint64_t seed = 0;

  int count() const { return static_cast<int>(samples.cols()); }
};

// Deterministic in (distribution, n, seed). Throws ConfigError if n < 1.
PerturbationBatch SamplePerturbations(const GaussianDistribution& dist, int n,
                                      std::uint64_t seed);

}  // namespace bundleopt::smoothing

#endif  // BUNDLEOPT_SMOOTHING_DISTRIBUTION_H_
