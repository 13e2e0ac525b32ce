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
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "bundleopt/common/error.h"
#include "bundleopt/smoothing/distribution.h"
#include "bundleopt/smoothing/estimators.h"
#include "bundleopt/smoothing/quadrature.h"
#include "bundleopt/smoothing/schedule.h"
#include "bundleopt/smoothing/test_functions.h"
#include "bundleopt/systems/linear_system.h"
#include "bundleopt/systems/pendulum.h"
#include "oracles/analytic_smoothing.h"

namespace bundleopt::smoothing {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd Scalar(double x) { return VectorXd::Constant(1, x); }

TEST(DistributionTest, ZeroCovarianceGivesZeroSamples) {
  const GaussianDistribution dist(MatrixXd::Zero(2, 2));
  const PerturbationBatch batch = SamplePerturbations(dist, 5, 1);
  ASSERT_EQ(batch.count(), 5);
  EXPECT_EQ(batch.samples.cwiseAbs().maxCoeff(), 0.0);
}

TEST(DistributionTest, SampleMeanIsCentered) {
  const int n = 100000;
  const GaussianDistribution dist = GaussianDistribution::Isotropic(3, 1.0);
  const PerturbationBatch batch = SamplePerturbations(dist, n, 42);
  const VectorXd mean = batch.samples.rowwise().mean();
  for (int i = 0; i < 3; ++i) {
    EXPECT_LE(std::abs(mean[i]), 4.0 / std::sqrt(double(n)));
  }
}

TEST(DistributionTest, SampleCovarianceMatchesCorrelatedInput) {
  MatrixXd cov(2, 2);
  cov << 2.0, 0.6, 0.6, 0.5;
  const PerturbationBatch batch =
      SamplePerturbations(GaussianDistribution(cov), 200000, 3);
  const MatrixXd emp =
      batch.samples * batch.samples.transpose() / double(batch.count());
  EXPECT_LE((emp - cov).cwiseAbs().maxCoeff(), 0.03);
}

TEST(DistributionTest, SameSeedSameBatch) {
  const GaussianDistribution dist = GaussianDistribution::Isotropic(2, 0.3);
  const PerturbationBatch a = SamplePerturbations(dist, 64, 9);
  const PerturbationBatch b = SamplePerturbations(dist, 64, 9);
  const PerturbationBatch c = SamplePerturbations(dist, 64, 10);
  EXPECT_TRUE(a.samples == b.samples);
  EXPECT_FALSE(a.samples == c.samples);
}

TEST(DistributionTest, RejectsIndefiniteCovariance) {
  MatrixXd cov = MatrixXd::Identity(2, 2);
  cov(1, 1) = -0.1;
  EXPECT_THROW(GaussianDistribution{cov}, ConfigError);
  EXPECT_THROW(SamplePerturbations(GaussianDistribution::Isotropic(1, 1.0),
                                   0, 1),
               ConfigError);
}

TEST(TestFunctionTest, CatalogValues) {
  const ScalarFunction w = WigglyQuadratic();
  EXPECT_DOUBLE_EQ(w.Value(Scalar(0.3)), 0.09 + 0.1 * std::sin(6.0));
  const ScalarFunction h = Heaviside();
  EXPECT_EQ(h.Value(Scalar(0.0)), 1.0);
  EXPECT_EQ(h.Value(Scalar(-1e-12)), 0.0);
  const ScalarFunction v = Vee();
  EXPECT_EQ(v.Value(Scalar(0.0)), -1.0);
  EXPECT_EQ(v.Value(Scalar(-0.5)), 1.5);
  EXPECT_EQ(v.Value(Scalar(2.0)), 1.0);
  // Right-sided derivative at the kink.
  EXPECT_EQ(v.Gradient(Scalar(0.0))[0], 1.0);
  EXPECT_THROW(ParseTestFunctionId("sinc"), ConfigError);
  EXPECT_EQ(ParseTestFunctionId("vee"), TestFunctionId::kVee);
}

TEST(BundledObjectiveTest, ConstantIsExact) {
  const ScalarBundleEstimate e =
      BundledObjective(Constant(3.0), Scalar(0.4),
                       GaussianDistribution::Isotropic(1, 0.5), 100, 1);
  EXPECT_EQ(e.value, 3.0);
  EXPECT_EQ(e.empirical_variance, 0.0);
}

TEST(BundledObjectiveTest, QuadraticMatchesSecondMoment) {
  ScalarFunction sq;
  sq.value = [](const VectorXd& x) { return x.squaredNorm(); };
  const double sigma = 0.7;
  const int n = 20000;
  const ScalarBundleEstimate e = BundledObjective(
      sq, Scalar(0.0), GaussianDistribution::Isotropic(1, sigma), n, 11);
  EXPECT_NEAR(e.value, sigma * sigma, 4.0 * e.StandardError());
  EXPECT_GT(e.empirical_variance, 0.0);
}

TEST(BundledObjectiveTest, WigglyMatchesClosedForm) {
  const double sigma = 0.2;
  const int n = 10000;
  const ScalarFunction f = WigglyQuadratic();
  for (double x : {-1.0, -0.3, 0.0, 0.45, 1.2}) {
    const ScalarBundleEstimate e = BundledObjective(
        f, Scalar(x), GaussianDistribution::Isotropic(1, sigma), n, 5);
    EXPECT_NEAR(e.value, testing::SmoothedWiggly(x, sigma),
                4.0 * e.StandardError())
        << "x=" << x;
  }
}

TEST(FirstOrderTest, LinearIsExact) {
  VectorXd a(3);
  a << 1.0, -2.0, 0.5;
  const BundleEstimate e =
      FirstOrderGradientBundle(Linear(a), VectorXd::Zero(3),
                               GaussianDistribution::Isotropic(3, 1.0), 17, 2);
  EXPECT_TRUE(e.value == a);
  EXPECT_EQ(e.empirical_variance.maxCoeff(), 0.0);
}

TEST(FirstOrderTest, HeavisideBundleIsZeroAlmostSurely) {
  for (int n : {1, 100, 10000}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const BundleEstimate e = FirstOrderGradientBundle(
          Heaviside(), Scalar(0.0), GaussianDistribution::Isotropic(1, 0.3),
          n, seed);
      EXPECT_EQ(e.value[0], 0.0);
    }
  }
}

TEST(FirstOrderTest, VeeBundleIsQuantized) {
  const int n = 10;
  std::set<double> allowed;
  for (int k = 0; k <= n; ++k) allowed.insert(double(2 * k - n) / n);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const BundleEstimate e = FirstOrderGradientBundle(
        Vee(), Scalar(0.0), GaussianDistribution::Isotropic(1, 1.0), n, seed);
    bool found = false;
    for (double v : allowed) found |= std::abs(v - e.value[0]) < 1e-12;
    EXPECT_TRUE(found) << e.value[0];
  }
}

TEST(FirstOrderTest, MatchesOracleForContinuousFunction) {
  // Law of large numbers: within four standard errors for >= 95% of seeds.
  const double sigma = 0.2;
  const int n = 10000;
  const GaussianDistribution dist = GaussianDistribution::Isotropic(1, sigma);
  const ScalarFunction f = WigglyQuadratic();
  const OracleResult oracle = ConvolutionOracle(f, Scalar(0.3), dist);
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BundleEstimate e = FirstOrderGradientBundle(f, Scalar(0.3), dist,
                                                      n, seed);
    hits += std::abs(e.value[0] - oracle.gradient[0]) <=
            4.0 * e.StandardError()[0];
  }
  EXPECT_GE(hits, 95);
}

TEST(ZeroOrderTest, LinearIsExact) {
  VectorXd a(2);
  a << 3.0, -1.0;
  const BundleEstimate e =
      ZeroOrderGradientBundle(Linear(a), VectorXd::Ones(2),
                              GaussianDistribution::Isotropic(2, 0.5), 8, 4);
  EXPECT_LE((e.value - a).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ZeroOrderTest, HeavisideRecoversSmoothedSlope) {
  const double sigma = 0.5;
  const BundleEstimate e = ZeroOrderGradientBundle(
      Heaviside(), Scalar(0.0), GaussianDistribution::Isotropic(1, sigma),
      100000, 8);
  const double expected = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  EXPECT_NEAR(e.value[0], expected, 0.1 * expected);
}

TEST(ZeroOrderTest, QuadraticSlopeConverges) {
  ScalarFunction sq;
  sq.value = [](const VectorXd& x) { return x.squaredNorm(); };
  const BundleEstimate e = ZeroOrderGradientBundle(
      sq, Scalar(1.0), GaussianDistribution::Isotropic(1, 0.3), 40000, 6);
  EXPECT_NEAR(e.value[0], 2.0, 4.0 * e.StandardError()[0]);
  EXPECT_NEAR(e.value[0], 2.0, 0.05);
}

TEST(ZeroOrderTest, TooFewSamplesIsSingular) {
  EXPECT_THROW(ZeroOrderGradientBundle(WigglyQuadratic(), VectorXd::Zero(3),
                                       GaussianDistribution::Isotropic(3, 1.0),
                                       2, 1),
               SingularRegressionError);
}

TEST(ZeroVarianceTest, EstimatorsReduceToExactGradient) {
  const GaussianDistribution dist(MatrixXd::Zero(1, 1));
  const ScalarFunction f = WigglyQuadratic();
  const VectorXd x = Scalar(0.37);
  const double exact = f.Gradient(x)[0];
  EXPECT_EQ(BundledObjective(f, x, dist, 10, 1).value, f.Value(x));
  EXPECT_EQ(FirstOrderGradientBundle(f, x, dist, 10, 1).value[0], exact);
  EXPECT_NEAR(ZeroOrderGradientBundle(f, x, dist, 10, 1).value[0], exact,
              1e-12);
  const OracleResult oracle = ConvolutionOracle(f, x, dist);
  EXPECT_NEAR(oracle.value, f.Value(x), 1e-15);
  EXPECT_NEAR(oracle.gradient[0], exact, 1e-12);
}

TEST(ZeroVarianceTest, JacobianBundlesReduceToExactJacobian) {
  systems::Pendulum pendulum;
  VectorXd x(2), u(1);
  x << 0.4, -1.1;
  u << 0.7;
  const systems::StepJacobians exact = pendulum.Jacobians(x, u);
  const GaussianDistribution dist(MatrixXd::Zero(3, 3));
  const JacobianBundle first = FirstOrderJacobianBundle(pendulum, x, u, dist,
                                                        5, 1);
  const JacobianBundle zero = ZeroOrderJacobianBundle(pendulum, x, u, dist,
                                                      5, 1);
  EXPECT_LE((first.A - exact.A).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE((first.B - exact.B).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE((zero.A - exact.A).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((zero.B - exact.B).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(JacobianBundleTest, LinearSystemIsExact) {
  MatrixXd A(2, 2), B(2, 1);
  A << 1.0, 0.1, -0.2, 0.9;
  B << 0.0, 0.5;
  const systems::LinearSystem sys(A, B);
  const GaussianDistribution dist = GaussianDistribution::Isotropic(3, 0.4);
  const VectorXd x = VectorXd::Ones(2), u = VectorXd::Ones(1);
  const JacobianBundle first = FirstOrderJacobianBundle(sys, x, u, dist, 10, 3);
  const JacobianBundle zero = ZeroOrderJacobianBundle(sys, x, u, dist, 10, 3);
  EXPECT_LE((first.A - A).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE((first.B - B).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE((zero.A - A).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LE((zero.B - B).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_GE(zero.A_variance.minCoeff(), 0.0);
}

// x+ = x + H(u): a step in the input.
class StepInputSystem : public systems::DynamicalSystem {
 public:
  int state_dim() const override { return 1; }
  int input_dim() const override { return 1; }
  std::string name() const override { return "step_input"; }
  VectorXd Step(const VectorXd& x, const VectorXd& u) const override {
    return x + VectorXd::Constant(1, u[0] >= 0.0 ? 1.0 : 0.0);
  }
  bool HasAnalyticJacobians() const override { return true; }
  systems::StepJacobians Jacobians(const VectorXd&,
                                   const VectorXd&) const override {
    return {MatrixXd::Identity(1, 1), MatrixXd::Zero(1, 1)};
  }
};

TEST(JacobianBundleTest, ZeroOrderSeesStepFirstOrderDoesNot) {
  const StepInputSystem sys;
  const double sigma = 0.5;
  MatrixXd cov = MatrixXd::Zero(2, 2);
  cov(1, 1) = sigma * sigma;
  const GaussianDistribution dist(cov);
  const VectorXd x = VectorXd::Zero(1), u = VectorXd::Zero(1);
  const JacobianBundle first = FirstOrderJacobianBundle(sys, x, u, dist,
                                                        1000, 2);
  const JacobianBundle zero = ZeroOrderJacobianBundle(sys, x, u, dist,
                                                      100000, 2);
  const double density = testing::NormalPdf(0.0) / sigma;
  EXPECT_EQ(first.B(0, 0), 0.0);
  EXPECT_NEAR(zero.B(0, 0), density, 0.05 * density);
  // The state is unperturbed, so its column comes from the exact Jacobian.
  EXPECT_NEAR(zero.A(0, 0), 1.0, 1e-12);
}

TEST(QuadratureTest, GaussHermiteMoments) {
  const QuadratureRule& rule = GaussHermiteRule(20);
  const auto moment = [&](int p) {
    return (rule.weights.array() * rule.nodes.array().pow(p)).sum();
  };
  EXPECT_NEAR(moment(0), 1.0, 1e-13);
  EXPECT_NEAR(moment(1), 0.0, 1e-13);
  EXPECT_NEAR(moment(2), 1.0, 1e-12);
  EXPECT_NEAR(moment(4), 3.0, 1e-11);
  EXPECT_NEAR(moment(6), 15.0, 1e-10);
}

TEST(QuadratureTest, GaussLegendreIntegratesPolynomials) {
  const QuadratureRule& rule = GaussLegendreRule(8);
  EXPECT_NEAR(rule.weights.sum(), 2.0, 1e-14);
  EXPECT_NEAR((rule.weights.array() * rule.nodes.array().pow(14)).sum(),
              2.0 / 15.0, 1e-14);
}

TEST(QuadratureTest, RejectsMoreThanThreeDimensions) {
  EXPECT_THROW(ConvolutionOracle(WigglyQuadratic(), VectorXd::Zero(4),
                                 GaussianDistribution::Isotropic(4, 0.1)),
               UnsupportedError);
}

TEST(QuadratureTest, MultivariateSeparableSum) {
  const double sigma = 0.3;
  VectorXd x(3);
  x << 0.2, -0.5, 0.1;
  const OracleResult r = ConvolutionOracle(
      WigglyQuadratic(), x, GaussianDistribution::Isotropic(3, sigma), 40);
  double expected = 0.0;
  for (int i = 0; i < 3; ++i) expected += testing::SmoothedWiggly(x[i], sigma);
  EXPECT_NEAR(r.value, expected, 1e-10);
}

TEST(OracleTest, ConstantFunction) {
  const OracleResult r = ConvolutionOracle(
      Constant(2.5), Scalar(0.1), GaussianDistribution::Isotropic(1, 0.3));
  EXPECT_NEAR(r.value, 2.5, 1e-13);
  EXPECT_NEAR(r.gradient[0], 0.0, 1e-13);
}

TEST(OracleTest, HeavisideUnitVariance) {
  const OracleResult r = ConvolutionOracle(
      Heaviside(), Scalar(0.0), GaussianDistribution::Isotropic(1, 1.0));
  EXPECT_NEAR(r.value, 0.5, 1e-10);
  EXPECT_NEAR(r.gradient[0], 1.0 / std::sqrt(2.0 * std::numbers::pi), 1e-6);
}

TEST(OracleTest, WigglyAtOrigin) {
  const OracleResult r = ConvolutionOracle(
      WigglyQuadratic(), Scalar(0.0), GaussianDistribution::Isotropic(1, 0.2));
  EXPECT_NEAR(r.value, 0.04, 1e-12);
}

// The oracle agrees with closed forms, and its derivative agrees with a
// finite difference of its own value, across smoothing scales.
class OracleScaleTest : public ::testing::TestWithParam<double> {};

TEST_P(OracleScaleTest, AgreesWithClosedForms) {
  const double sigma = GetParam();
  const GaussianDistribution dist = GaussianDistribution::Isotropic(1, sigma);
  struct Case {
    ScalarFunction f;
    double (*value)(double, double);
    double (*derivative)(double, double);
  };
  const Case cases[] = {
      {WigglyQuadratic(), testing::SmoothedWiggly,
       testing::SmoothedWigglyDerivative},
      {Heaviside(), testing::SmoothedHeaviside,
       testing::SmoothedHeavisideDerivative},
      {Vee(), testing::SmoothedVee, testing::SmoothedVeeDerivative},
  };
  for (const Case& c : cases) {
    for (double x : {-1.3, -0.4, -0.05, 0.0, 0.02, 0.3, 1.1}) {
      const OracleResult r = ConvolutionOracle(c.f, Scalar(x), dist);
      const double value = c.value(x, sigma);
      const double slope = c.derivative(x, sigma);
      EXPECT_NEAR(r.value, value, 1e-6 * std::max(1.0, std::abs(value)))
          << c.f.name << " x=" << x;
      EXPECT_NEAR(r.gradient[0], slope, 1e-4 * std::max(1.0, std::abs(slope)))
          << c.f.name << " x=" << x;

      const double h = 1e-4 * sigma;
      const double fd =
          (ConvolutionOracle(c.f, Scalar(x + h), dist).value -
           ConvolutionOracle(c.f, Scalar(x - h), dist).value) /
          (2 * h);
      EXPECT_NEAR(fd, r.gradient[0], 1e-4 * std::max(1.0, std::abs(fd)))
          << c.f.name << " x=" << x;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Scales, OracleScaleTest,
                         ::testing::Values(0.05, 0.2, 1.0));

TEST(ScheduleTest, GeometricAndConstant) {
  const MatrixXd sigma0 = 0.25 * MatrixXd::Identity(2, 2);
  const VarianceSchedule geo = VarianceSchedule::Geometric(0.5);
  EXPECT_TRUE(geo.Apply(sigma0, 0) == sigma0);
  EXPECT_TRUE(geo.Apply(sigma0, 3).isApprox(sigma0 / 8.0));
  const VarianceSchedule flat = VarianceSchedule::Constant();
  EXPECT_TRUE(flat.Apply(sigma0, 17) == sigma0);
}

TEST(ScheduleTest, GeometricFactorsAreSquareSummable) {
  for (double gamma : {0.3, 0.7, 0.95, 0.999}) {
    const VarianceSchedule geo = VarianceSchedule::Geometric(gamma);
    double partial = 0.0;
    for (int k = 0; k < 1000; ++k) {
      partial += geo.Factor(k) * geo.Factor(k);
      const double closed =
          (1.0 - std::pow(gamma, 2.0 * (k + 1))) / (1.0 - gamma * gamma);
      ASSERT_NEAR(partial, closed, 1e-9 * closed) << gamma << " " << k;
    }
    EXPECT_LE(partial, (1.0 + 1e-12) / (1.0 - gamma * gamma));
  }
}

TEST(ScheduleTest, RejectsGammaOutsideUnitInterval) {
  EXPECT_THROW(VarianceSchedule::Geometric(1.0), ConfigError);
  EXPECT_THROW(VarianceSchedule::Geometric(0.0), ConfigError);
  EXPECT_THROW(VarianceSchedule::Geometric(-0.2), ConfigError);
  EXPECT_THROW(ParseSchedulePolicy("linear"), ConfigError);
}

TEST(DeterminismTest, EstimatesArePureFunctionsOfSeed) {
  const GaussianDistribution dist = GaussianDistribution::Isotropic(2, 0.4);
  const VectorXd x = VectorXd::Constant(2, 0.2);
  const BundleEstimate a = ZeroOrderGradientBundle(Vee(), x, dist, 50, 123);
  const BundleEstimate b = ZeroOrderGradientBundle(Vee(), x, dist, 50, 123);
  EXPECT_TRUE(a.value == b.value);
  EXPECT_TRUE(a.empirical_variance == b.empirical_variance);
}

}  // namespace
}  // namespace bundleopt::smoothing
