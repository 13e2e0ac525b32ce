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
#include "bundleopt/smoothing/quadrature.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "bundleopt/common/error.h"

namespace bundleopt::smoothing {
namespace {

// Composite rules integrate the standard normal over [-kTail, kTail]; the
// neglected mass is below 1e-22.
constexpr double kTail = 10.0;
constexpr double kPanelWidth = 0.5;
constexpr int kPanelOrder = 16;
// Nodes whose normalized weight falls below this are skipped.
constexpr double kNegligibleWeight = 1e-22;

// Golub-Welsch: eigen-decomposition of the symmetric Jacobi matrix of the
// orthogonal polynomial family with zero diagonal and off-diagonal `beta`.
QuadratureRule GolubWelsch(int n, const std::function<double(int)>& beta,
                           double total_mass) {
  MatrixXd jacobi = MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    jacobi(k - 1, k) = jacobi(k, k - 1) = beta(k);
  }
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(jacobi);
  QuadratureRule rule;
  rule.nodes = eig.eigenvalues();
  rule.weights =
      total_mass * eig.eigenvectors().row(0).transpose().array().square();
  return rule;
}

const QuadratureRule& CachedRule(
    std::map<int, std::unique_ptr<QuadratureRule>>& cache, std::mutex& mutex,
    int n, const std::function<QuadratureRule()>& build) {
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<QuadratureRule>(build());
  return *slot;
}

double StandardNormalPdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

// Rule for E[g(Z)], Z ~ N(0, 1), whose panels start and end at the given
// breakpoints (in standard-normal units).
QuadratureRule CompositeNormalRule(std::vector<double> cuts, int min_points) {
  std::vector<double> edges{-kTail};
  std::sort(cuts.begin(), cuts.end());
  for (double c : cuts) {
    if (c > edges.back() && c < kTail) edges.push_back(c);
  }
  edges.push_back(kTail);

  double width = kPanelWidth;
  const int min_panels = (min_points + kPanelOrder - 1) / kPanelOrder;
  if (2.0 * kTail / width < min_panels) width = 2.0 * kTail / min_panels;

  const QuadratureRule& gl = GaussLegendreRule(kPanelOrder);
  std::vector<double> nodes, weights;
  for (size_t s = 0; s + 1 < edges.size(); ++s) {
    const double a = edges[s], b = edges[s + 1];
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = a + p * h;
      for (int q = 0; q < kPanelOrder; ++q) {
        const double z = lo + 0.5 * h * (gl.nodes[q] + 1.0);
        nodes.push_back(z);
        weights.push_back(0.5 * h * gl.weights[q] * StandardNormalPdf(z));
      }
    }
  }
  QuadratureRule rule;
  rule.nodes = Eigen::Map<VectorXd>(nodes.data(), nodes.size());
  rule.weights = Eigen::Map<VectorXd>(weights.data(), weights.size());
  return rule;
}

// One perturbed direction: x = mean + scale * z * direction.
struct Axis {
  VectorXd direction;
  QuadratureRule rule;
};

}  // namespace

const QuadratureRule& GaussHermiteRule(int n) {
  if (n < 1) throw ConfigError("GaussHermiteRule: need n >= 1");
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  static std::mutex mutex;
  return CachedRule(cache, mutex, n, [n]() {
    return GolubWelsch(n, [](int k) { return std::sqrt(double(k)); }, 1.0);
  });
}

const QuadratureRule& GaussLegendreRule(int n) {
  if (n < 1) throw ConfigError("GaussLegendreRule: need n >= 1");
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  static std::mutex mutex;
  return CachedRule(cache, mutex, n, [n]() {
    return GolubWelsch(
        n,
        [](int k) {
          const double kk = k;
          return kk / std::sqrt(4.0 * kk * kk - 1.0);
        },
        2.0);
  });
}

VectorXd GaussianExpectation(
    const std::function<VectorXd(const VectorXd&)>& fn, const VectorXd& mean,
    const GaussianDistribution& dist, const QuadratureOptions& options) {
  if (mean.size() != dist.dimension()) {
    throw ConfigError("GaussianExpectation: mean/distribution size mismatch");
  }
  if (dist.rank() > 3) {
    std::ostringstream msg;
    msg << "quadrature supports at most 3 perturbed dimensions, got "
        << dist.rank();
    throw UnsupportedError(msg.str());
  }
  if (options.points < 1) {
    throw ConfigError("GaussianExpectation: need at least one point");
  }

  std::vector<Axis> axes;
  const MatrixXd& basis = dist.range_basis();
  for (int j = 0; j < dist.rank(); ++j) {
    const VectorXd v = basis.col(j);
    const double sigma = std::sqrt(v.dot(dist.covariance() * v));
    Axis axis;
    axis.direction = sigma * v;
    if (dist.is_diagonal() && !options.breakpoints.empty()) {
      Eigen::Index coord;
      v.cwiseAbs().maxCoeff(&coord);
      std::vector<double> cuts;
      for (double b : options.breakpoints) {
        cuts.push_back((b - mean[coord]) / sigma);
      }
      axis.rule = CompositeNormalRule(std::move(cuts), options.points);
    } else {
      axis.rule = GaussHermiteRule(options.points);
    }
    axes.push_back(std::move(axis));
  }

  // Odometer over the tensor grid; a rank-0 distribution evaluates fn once.
  std::vector<std::vector<int>> kept(axes.size());
  for (size_t a = 0; a < axes.size(); ++a) {
    const VectorXd& w = axes[a].rule.weights;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      if (w[i] > kNegligibleWeight) kept[a].push_back(static_cast<int>(i));
    }
  }

  VectorXd total;
  std::vector<size_t> index(axes.size(), 0);
  VectorXd point(mean.size());
  while (true) {
    double weight = 1.0;
    point = mean;
    for (size_t a = 0; a < axes.size(); ++a) {
      const int node = kept[a][index[a]];
      weight *= axes[a].rule.weights[node];
      point += axes[a].rule.nodes[node] * axes[a].direction;
    }
    const VectorXd value = fn(point);
    if (total.size() == 0) total = VectorXd::Zero(value.size());
    total += weight * value;

    size_t a = 0;
    for (; a < axes.size(); ++a) {
      if (++index[a] < kept[a].size()) break;
      index[a] = 0;
    }
    if (a == axes.size()) break;
  }
  return total;
}

OracleResult ConvolutionOracle(const ScalarFunction& f, const VectorXd& x,
                               const GaussianDistribution& dist,
                               int quadrature_points) {
  QuadratureOptions options;
  options.points = quadrature_points;
  options.breakpoints = f.breakpoints;
  const auto value_fn = [&f](const VectorXd& p) {
    return VectorXd::Constant(1, f.Value(p));
  };

  OracleResult result;
  result.value = GaussianExpectation(value_fn, x, dist, options)[0];

  if (f.continuous && f.HasGradient()) {
    result.gradient = GaussianExpectation(f.gradient, x, dist, options);
    return result;
  }

  const VectorXd sigmas = dist.StandardDeviations();
  result.gradient.resize(x.size());
  VectorXd probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = sigmas[i] > 0 ? 1e-3 * sigmas[i] : 1e-6;
    probe[i] = x[i] + h;
    const double up = GaussianExpectation(value_fn, probe, dist, options)[0];
    probe[i] = x[i] - h;
    const double down = GaussianExpectation(value_fn, probe, dist, options)[0];
    probe[i] = x[i];
    result.gradient[i] = (up - down) / (2.0 * h);
  }
  return result;
}

}  // namespace bundleopt::smoothing
