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
#include "bundleopt/smoothing/estimators.h"

#include <cmath>
#include <functional>
#include <sstream>

#include "bundleopt/common/error.h"

namespace bundleopt::smoothing {
namespace {

using systems::DynamicalSystem;

void CheckDimension(const GaussianDistribution& dist, Eigen::Index expected,
                    const char* what) {
  if (dist.dimension() != expected) {
    std::ostringstream msg;
    msg << what << ": distribution has dimension " << dist.dimension()
        << ", expected " << expected;
    throw ConfigError(msg.str());
  }
}

// Column-wise mean and unbiased variance of the columns of `summands`.
void MeanAndVariance(const MatrixXd& summands, VectorXd* mean,
                     VectorXd* variance) {
  const Eigen::Index n = summands.cols();
  *mean = summands.rowwise().sum() / static_cast<double>(n);
  if (n < 2) {
    *variance = VectorXd::Zero(summands.rows());
    return;
  }
  *variance = (summands.colwise() - *mean).array().square().rowwise().sum() /
              static_cast<double>(n - 1);
}

struct LocalFit {
  MatrixXd jacobian;  // k x d
  MatrixXd variance;  // k x d
};

// Least-squares fit deltas(:, i) ~ J perturbations(:, i) restricted to the
// range of the covariance; the null-space block of J comes from
// `exact_jacobian`, which is only invoked when that block is non-empty.
LocalFit FitLocalJacobian(const MatrixXd& deltas,
                          const MatrixXd& perturbations,
                          const GaussianDistribution& dist,
                          const std::function<MatrixXd()>& exact_jacobian) {
  const Eigen::Index k = deltas.rows();
  const Eigen::Index d = perturbations.rows();
  const Eigen::Index n = perturbations.cols();
  const int r = dist.rank();

  LocalFit fit{MatrixXd::Zero(k, d), MatrixXd::Zero(k, d)};
  if (r > 0) {
    const MatrixXd& basis = dist.range_basis();
    const MatrixXd coords = basis.transpose() * perturbations;  // r x N
    Eigen::ColPivHouseholderQR<MatrixXd> qr(coords.transpose());
    if (qr.rank() < r) {
      std::ostringstream msg;
      msg << "zero-order regression is rank deficient: " << n
          << " samples span " << qr.rank() << " of " << r
          << " perturbed directions; raise the sample count";
      throw SingularRegressionError(msg.str());
    }
    const MatrixXd normal = coords * coords.transpose();
    const MatrixXd gains =
        basis * normal.ldlt().solve(coords);  // d x N, mean of N*y_i*g_i^T
    fit.jacobian = deltas * gains.transpose();
    if (n > 1) {
      const double nd = static_cast<double>(n);
      const MatrixXd second_moment = nd * nd * deltas.array().square().matrix() *
                                     gains.array().square().matrix().transpose();
      fit.variance = ((second_moment.array() -
                       nd * fit.jacobian.array().square()) /
                      (nd - 1.0))
                         .cwiseMax(0.0)
                         .matrix();
    }
  }
  if (r < d) {
    const MatrixXd& null = dist.null_basis();
    fit.jacobian += exact_jacobian() * null * null.transpose();
  }
  return fit;
}

}  // namespace

double ScalarBundleEstimate::StandardError() const {
  return sample_count > 0 ? std::sqrt(empirical_variance / sample_count) : 0.0;
}

VectorXd BundleEstimate::StandardError() const {
  if (sample_count <= 0) return VectorXd::Zero(value.size());
  return (empirical_variance / sample_count).cwiseSqrt();
}

ScalarBundleEstimate BundledObjective(const ScalarFunction& f,
                                      const VectorXd& x,
                                      const GaussianDistribution& dist, int n,
                                      std::uint64_t seed) {
  CheckDimension(dist, x.size(), "BundledObjective");
  const PerturbationBatch batch = SamplePerturbations(dist, n, seed);
  MatrixXd values(1, n);
  for (int i = 0; i < n; ++i) {
    values(0, i) = f.Value(x + batch.samples.col(i));
  }
  VectorXd mean, variance;
  MeanAndVariance(values, &mean, &variance);
  return {mean[0], variance[0], n};
}

BundleEstimate FirstOrderGradientBundle(const ScalarFunction& f,
                                        const VectorXd& x,
                                        const GaussianDistribution& dist,
                                        int n, std::uint64_t seed) {
  CheckDimension(dist, x.size(), "FirstOrderGradientBundle");
  if (!f.HasGradient()) {
    throw ConfigError("FirstOrderGradientBundle: '" + f.name +
                      "' has no gradient");
  }
  const PerturbationBatch batch = SamplePerturbations(dist, n, seed);
  MatrixXd gradients(x.size(), n);
  for (int i = 0; i < n; ++i) {
    gradients.col(i) = f.gradient(x + batch.samples.col(i));
  }
  BundleEstimate estimate;
  estimate.sample_count = n;
  MeanAndVariance(gradients, &estimate.value, &estimate.empirical_variance);
  return estimate;
}

BundleEstimate ZeroOrderGradientBundle(const ScalarFunction& f,
                                       const VectorXd& x,
                                       const GaussianDistribution& dist,
                                       int n, std::uint64_t seed) {
  CheckDimension(dist, x.size(), "ZeroOrderGradientBundle");
  const PerturbationBatch batch = SamplePerturbations(dist, n, seed);
  const double f0 = f.Value(x);
  MatrixXd deltas(1, n);
  for (int i = 0; i < n; ++i) {
    deltas(0, i) = f.Value(x + batch.samples.col(i)) - f0;
  }
  const LocalFit fit = FitLocalJacobian(deltas, batch.samples, dist, [&]() {
    return MatrixXd(f.Gradient(x).transpose());
  });
  return {fit.jacobian.transpose(), fit.variance.transpose(), n};
}

JacobianBundle FirstOrderJacobianBundle(const DynamicalSystem& system,
                                        const VectorXd& x, const VectorXd& u,
                                        const GaussianDistribution& dist,
                                        int n, std::uint64_t seed) {
  system.CheckDimensions(x, u);
  const int nx = system.state_dim();
  const int nu = system.input_dim();
  CheckDimension(dist, nx + nu, "FirstOrderJacobianBundle");
  const PerturbationBatch batch = SamplePerturbations(dist, n, seed);

  // Each column holds one sampled [A B] flattened column-major.
  const int entries = nx * (nx + nu);
  MatrixXd samples(entries, n);
  MatrixXd stacked(nx, nx + nu);
  for (int i = 0; i < n; ++i) {
    const auto w = batch.samples.col(i);
    const systems::StepJacobians jac =
        system.Jacobians(x + w.head(nx), u + w.tail(nu));
    stacked << jac.A, jac.B;
    samples.col(i) = Eigen::Map<const VectorXd>(stacked.data(), entries);
  }
  VectorXd mean, variance;
  MeanAndVariance(samples, &mean, &variance);
  const Eigen::Map<const MatrixXd> mean_ab(mean.data(), nx, nx + nu);
  const Eigen::Map<const MatrixXd> var_ab(variance.data(), nx, nx + nu);

  JacobianBundle bundle;
  bundle.A = mean_ab.leftCols(nx);
  bundle.B = mean_ab.rightCols(nu);
  bundle.A_variance = var_ab.leftCols(nx);
  bundle.B_variance = var_ab.rightCols(nu);
  bundle.sample_count = n;
  return bundle;
}

JacobianBundle ZeroOrderJacobianBundle(const DynamicalSystem& system,
                                       const VectorXd& x, const VectorXd& u,
                                       const GaussianDistribution& dist,
                                       int n, std::uint64_t seed) {
  system.CheckDimensions(x, u);
  const int nx = system.state_dim();
  const int nu = system.input_dim();
  CheckDimension(dist, nx + nu, "ZeroOrderJacobianBundle");
  const PerturbationBatch batch = SamplePerturbations(dist, n, seed);

  const VectorXd f0 = system.Step(x, u);
  MatrixXd deltas(nx, n);
  for (int i = 0; i < n; ++i) {
    const auto w = batch.samples.col(i);
    deltas.col(i) = system.Step(x + w.head(nx), u + w.tail(nu)) - f0;
  }
  const LocalFit fit = FitLocalJacobian(deltas, batch.samples, dist, [&]() {
    const systems::StepJacobians jac = system.Jacobians(x, u);
    MatrixXd stacked(nx, nx + nu);
    stacked << jac.A, jac.B;
    return stacked;
  });

  JacobianBundle bundle;
  bundle.A = fit.jacobian.leftCols(nx);
  bundle.B = fit.jacobian.rightCols(nu);
  bundle.A_variance = fit.variance.leftCols(nx);
  bundle.B_variance = fit.variance.rightCols(nu);
  bundle.sample_count = n;
  return bundle;
}

}  // namespace bundleopt::smoothing
