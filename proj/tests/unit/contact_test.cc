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
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "bundleopt/common/error.h"
#include "bundleopt/contact/contact_1d.h"
#include "bundleopt/contact/contact_2d.h"
#include "bundleopt/contact/contact_systems.h"
#include "bundleopt/contact/penalty.h"
#include "bundleopt/smoothing/estimators.h"
#include "bundleopt/smoothing/quadrature.h"
#include "oracles/contact_lcp.h"

namespace bundleopt::contact {
namespace {

using Eigen::MatrixXd;
using Eigen::Vector2d;
using Eigen::VectorXd;

double RelErr(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

Contact1DParams UnitRatioParams() {
  Contact1DParams p;
  p.mass = 1.0;
  p.timestep = 0.1;
  p.stiffness = 100.0;  // c = 1
  return p;
}

TEST(Contact1DTest, SeparationExample) {
  const Contact1DResult r = Step1D({1.0, 0.0}, 0.5, UnitRatioParams());
  EXPECT_EQ(r.diagnostics.mode, Contact1DMode::kSeparation);
  EXPECT_EQ(r.next.x_u, 1.0);
  EXPECT_EQ(r.next.x_a, 0.5);
  EXPECT_EQ(r.diagnostics.impulse, 0.0);
}

TEST(Contact1DTest, ContactExample) {
  const Contact1DParams p = UnitRatioParams();
  ASSERT_DOUBLE_EQ(p.c_ratio(), 1.0);
  const Contact1DResult r = Step1D({1.0, 0.0}, 1.5, p);
  EXPECT_EQ(r.diagnostics.mode, Contact1DMode::kContact);
  EXPECT_NEAR(r.next.x_u, 1.25, 1e-15);
  EXPECT_NEAR(r.next.x_a, 1.25, 1e-15);
  EXPECT_NEAR(r.diagnostics.impulse, 2.5, 1e-13);
}

TEST(Contact1DTest, BoundaryAgreement) {
  const Contact1DParams p = UnitRatioParams();
  const Contact1DResult at = Step1D({1.0, 0.0}, 1.0, p);
  EXPECT_EQ(at.next.x_u, 1.0);
  EXPECT_EQ(at.next.x_a, 1.0);
  EXPECT_EQ(at.diagnostics.impulse, 0.0);
  const Contact1DResult below = Step1D({1.0, 0.0}, 1.0 - 1e-12, p);
  EXPECT_NEAR(below.next.x_u, at.next.x_u, 1e-8);
  EXPECT_NEAR(below.next.x_a, at.next.x_a, 1e-8);
}

TEST(Contact1DTest, MatchesLcpOracleOnRandomInstances) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> pos(-2.0, 2.0), logp(-1.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    Contact1DParams p;
    p.mass = std::pow(10.0, logp(rng));
    p.timestep = 0.1 * std::pow(10.0, logp(rng));
    p.stiffness = 100.0 * std::pow(10.0, logp(rng));
    const double x_u = pos(rng), x_a = x_u - std::abs(pos(rng));
    const double command = pos(rng);
    const Contact1DResult r = Step1D({x_u, x_a}, command, p);
    const auto oracle = testing::Step1DByLcp(x_u, command, p);
    ASSERT_TRUE(oracle.has_value());
    EXPECT_EQ(r.diagnostics.mode == Contact1DMode::kContact,
              oracle->in_contact);
    EXPECT_LE(RelErr(r.next.x_u, oracle->x_u), 1e-12);
    EXPECT_LE(RelErr(r.next.x_a, oracle->x_a), 1e-12);
    EXPECT_LE(RelErr(r.diagnostics.impulse, oracle->impulse), 1e-12);
    const Contact1DDiagnostics& d = r.diagnostics;
    EXPECT_GE(d.impulse, 0.0);
    EXPECT_GE(d.gap, -1e-10);
    EXPECT_LE(d.complementarity, 1e-10);
    EXPECT_LE(d.force_balance_residual, 1e-10);
    EXPECT_LE(d.momentum_residual, 1e-10 * std::max(1.0, d.impulse));
  }
}

TEST(Contact1DTest, PiecewiseAffineAlongSegments) {
  const Contact1DParams p = UnitRatioParams();
  const Contact1DState s{1.0, 0.0};
  // Two segments, one per mode; midpoints are averages of the endpoints.
  for (auto [a, b] : {std::pair{-0.5, 0.9}, std::pair{1.1, 3.0}}) {
    const Contact1DResult ra = Step1D(s, a, p), rb = Step1D(s, b, p);
    const Contact1DResult rm = Step1D(s, 0.5 * (a + b), p);
    EXPECT_NEAR(rm.next.x_u, 0.5 * (ra.next.x_u + rb.next.x_u), 1e-10);
    EXPECT_NEAR(rm.next.x_a, 0.5 * (ra.next.x_a + rb.next.x_a), 1e-10);
  }
}

TEST(Contact1DTest, JacobianMatchesFiniteDifferences) {
  const Contact1DSystem sys(UnitRatioParams());
  for (double command : {0.3, 1.7}) {
    const VectorXd x = Eigen::Vector2d(1.0, 0.0);
    const VectorXd u = VectorXd::Constant(1, command);
    const systems::StepJacobians analytic = sys.Jacobians(x, u);
    const systems::StepJacobians fd = systems::FiniteDifferenceJacobians(sys, x, u);
    EXPECT_LE((analytic.A - fd.A).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LE((analytic.B - fd.B).cwiseAbs().maxCoeff(), 1e-8);
  }
}

smoothing::GaussianDistribution InputOnly1D(double sigma) {
  MatrixXd cov = MatrixXd::Zero(3, 3);
  cov(2, 2) = sigma * sigma;
  return smoothing::GaussianDistribution(cov);
}

TEST(Contact1DBundleTest, DeepSeparationKeepsNoContactJacobian) {
  const Contact1DSystem sys(UnitRatioParams());
  const double sigma = 0.1;
  const VectorXd x = Eigen::Vector2d(1.0, 0.0);
  const VectorXd u = VectorXd::Constant(1, 1.0 - 5.0 * sigma);
  const smoothing::JacobianBundle b = smoothing::FirstOrderJacobianBundle(
      sys, x, u, InputOnly1D(sigma), 10000, 7);
  EXPECT_NEAR(b.B(0, 0), 0.0, 1e-3);
  EXPECT_NEAR(b.B(1, 0), 1.0, 1e-3);
  EXPECT_NEAR(b.A(0, 0), 1.0, 1e-3);
}

TEST(Contact1DBundleTest, BoundaryBlendsBothPieces) {
  const Contact1DParams params = UnitRatioParams();
  const Contact1DSystem sys(params);
  const double sigma = 0.1;
  const VectorXd x = Eigen::Vector2d(1.0, 0.0);
  const VectorXd u = VectorXd::Constant(1, 1.0);
  const int n = 10000;
  const smoothing::JacobianBundle first = smoothing::FirstOrderJacobianBundle(
      sys, x, u, InputOnly1D(sigma), n, 3);
  const smoothing::JacobianBundle zero = smoothing::ZeroOrderJacobianBundle(
      sys, x, u, InputOnly1D(sigma), n, 4);

  // Quadrature of the piecewise Jacobian over the command.
  const auto dxu_dcmd = [&](const VectorXd& c) {
    return VectorXd::Constant(1, Step1DJacobian({1.0, 0.0}, c[0], params)(0, 2));
  };
  smoothing::QuadratureOptions opts;
  opts.breakpoints = {1.0};
  const double oracle = smoothing::GaussianExpectation(
      dxu_dcmd, u, smoothing::GaussianDistribution::Isotropic(1, sigma),
      opts)[0];
  EXPECT_NEAR(oracle, 0.5 / (1.0 + params.c_ratio()), 1e-9);

  const double se_first = std::sqrt(first.B_variance(0, 0) / n);
  const double se_zero = std::sqrt(zero.B_variance(0, 0) / n);
  EXPECT_NEAR(first.B(0, 0), oracle, 4.0 * se_first);
  EXPECT_NEAR(zero.B(0, 0), first.B(0, 0),
              3.0 * std::hypot(se_first, se_zero));
}

Contact2DParams Params2D() {
  Contact2DParams p;
  p.mass = 1.0;
  p.timestep = 0.1;
  p.stiffness = 100.0;
  p.friction = 0.5;
  p.box_half_height = 0.5;
  p.sphere_radius = 0.1;
  return p;
}

TEST(Contact2DTest, FarCommandLeavesBoxAndIsFlatInHeight) {
  const Contact2DParams p = Params2D();
  const Contact2DState s{0.0, 0.0, 0.6};
  const Contact2DResult r = Step2DExact(s, Vector2d(0.3, 1.0), p);
  EXPECT_EQ(r.diagnostics.mode, Contact2DMode::kSeparation);
  EXPECT_EQ(r.next.x_u, 0.0);
  const double up =
      Step2DExact(s, Vector2d(0.3, 1.0 + 1e-6), p).next.x_u;
  const double down =
      Step2DExact(s, Vector2d(0.3, 1.0 - 1e-6), p).next.x_u;
  EXPECT_EQ(up - down, 0.0);
}

TEST(Contact2DTest, StickingByHand) {
  // c = 1, so box and sphere share half the commanded tangential motion.
  // Normal impulse hk (D - y_cmd) = 10 * 0.2 = 2; tangential m dx / h = 1.
  const Contact2DParams p = Params2D();
  const Contact2DResult r =
      Step2DExact({0.0, 0.0, 0.6}, Vector2d(0.2, 0.4), p);
  EXPECT_EQ(r.diagnostics.mode, Contact2DMode::kSticking);
  EXPECT_NEAR(r.next.x_u, 0.1, 1e-14);
  EXPECT_NEAR(r.next.x_a, 0.1, 1e-14);
  EXPECT_NEAR(r.next.y_a, 0.6, 1e-14);
  EXPECT_NEAR(r.diagnostics.normal_impulse, 2.0, 1e-12);
  EXPECT_NEAR(r.diagnostics.tangential_impulse, 1.0, 1e-12);
}

TEST(Contact2DTest, SlidingSaturatesFrictionCone) {
  const Contact2DParams p = Params2D();
  for (double dx : {1.5, -1.5}) {
    const Contact2DResult r =
        Step2DExact({0.0, 0.0, 0.6}, Vector2d(dx, 0.5), p);
    EXPECT_EQ(r.diagnostics.mode, dx > 0 ? Contact2DMode::kSlidingPositive
                                         : Contact2DMode::kSlidingNegative);
    EXPECT_NEAR(std::abs(r.diagnostics.tangential_impulse),
                p.friction * r.diagnostics.normal_impulse, 1e-14);
    EXPECT_GT(r.diagnostics.tangential_impulse * dx, 0.0);
  }
}

TEST(Contact2DTest, MatchesLcpOracleOnRandomInstances) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const Contact2DParams base = Params2D();
  int by_mode[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 10000; ++trial) {
    Contact2DParams p = base;
    p.friction = 0.1 + 0.9 * std::abs(unif(rng));
    p.mass = std::pow(10.0, unif(rng));
    const Contact2DState s{unif(rng), unif(rng),
                           p.contact_height() + std::abs(unif(rng))};
    const Vector2d cmd(s.x_a + unif(rng),
                       p.contact_height() + 0.5 * unif(rng));
    const Contact2DResult r = Step2DExact(s, cmd, p);
    ++by_mode[static_cast<int>(r.diagnostics.mode)];
    EXPECT_LE(r.diagnostics.complementarity, 1e-10);
    EXPECT_GE(r.diagnostics.gap, -1e-10);
    const auto oracle = testing::Step2DByLcp(s, cmd, p);
    ASSERT_TRUE(oracle.has_value()) << trial;
    EXPECT_LE(RelErr(r.next.x_u, oracle->next.x_u), 1e-10) << trial;
    EXPECT_LE(RelErr(r.next.x_a, oracle->next.x_a), 1e-10) << trial;
    EXPECT_LE(RelErr(r.next.y_a, oracle->next.y_a), 1e-10) << trial;
    EXPECT_LE(RelErr(r.diagnostics.normal_impulse, oracle->normal), 1e-10);
    EXPECT_LE(RelErr(r.diagnostics.tangential_impulse, oracle->tangential),
              1e-10);
  }
  for (int m = 0; m < 4; ++m) EXPECT_GT(by_mode[m], 100) << m;
}

TEST(Contact2DTest, ContinuousAcrossModeBoundaries) {
  const Contact2DParams p = Params2D();
  const Contact2DState s{0.0, 0.0, 0.6};
  const double D = p.contact_height();
  // Separation/contact boundary at y_cmd = D, sticking/sliding boundary
  // where |m dx/(h(1+c))| = mu hk (D - y).
  const double y = 0.4;
  const double normal = p.timestep * p.stiffness * (D - y);
  const double stick_limit =
      p.friction * normal * p.timestep * (1.0 + p.c_ratio()) / p.mass;
  const Vector2d boundaries[] = {{0.2, D}, {stick_limit, y}, {-stick_limit, y}};
  const Vector2d directions[] = {{0.0, 1.0}, {1.0, 0.0}, {1.0, 0.0}};
  // Directional limits: each piece is affine, so 2 f(eps) - f(2 eps)
  // recovers the one-sided value at the boundary.
  const auto limit = [&](const Vector2d& at, const Vector2d& dir) {
    const double eps = 1e-6;
    const Eigen::Vector3d near = Step2DExact(s, at + eps * dir, p).next.AsVector();
    const Eigen::Vector3d far =
        Step2DExact(s, at + 2 * eps * dir, p).next.AsVector();
    return Eigen::Vector3d(2 * near - far);
  };
  for (int i = 0; i < 3; ++i) {
    const Contact2DResult a = Step2DExact(s, boundaries[i] + 1e-6 * directions[i], p);
    const Contact2DResult b = Step2DExact(s, boundaries[i] - 1e-6 * directions[i], p);
    EXPECT_NE(a.diagnostics.mode, b.diagnostics.mode) << i;
    const Eigen::Vector3d from_above = limit(boundaries[i], directions[i]);
    const Eigen::Vector3d from_below = limit(boundaries[i], -directions[i]);
    EXPECT_LE((from_above - from_below).cwiseAbs().maxCoeff(), 1e-8) << i;
  }
}

TEST(Contact2DTest, PiecewiseAffineWithinModes) {
  const Contact2DParams p = Params2D();
  const Contact2DState s{0.0, 0.0, 0.6};
  const std::pair<Vector2d, Vector2d> segments[] = {
      {{-0.3, 0.9}, {0.4, 1.2}},   // separation
      {{-0.05, 0.3}, {0.1, 0.4}},  // sticking
      {{1.2, 0.3}, {1.6, 0.5}},    // sliding
  };
  for (const auto& [a, b] : segments) {
    const Contact2DResult ra = Step2DExact(s, a, p), rb = Step2DExact(s, b, p);
    for (double t : {0.25, 0.5, 0.8}) {
      const Contact2DResult rt = Step2DExact(s, (1 - t) * a + t * b, p);
      ASSERT_EQ(rt.diagnostics.mode, ra.diagnostics.mode);
      const Eigen::Vector3d lerp =
          (1 - t) * ra.next.AsVector() + t * rb.next.AsVector();
      EXPECT_LE((rt.next.AsVector() - lerp).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(AnitescuTest, AgreesWithExactWhenSeparatedOrSticking) {
  const Contact2DParams p = Params2D();
  const Contact2DState s{0.0, 0.0, 0.6};
  const Vector2d probes[] = {{0.1, 1.5}, {-0.3, 2.0},   // well separated
                             {0.2, 0.4}, {-0.1, 0.2},   // sticking
                             {0.0, 0.5}};
  for (const Vector2d& cmd : probes) {
    const Contact2DResult exact = Step2DExact(s, cmd, p);
    const Contact2DResult relaxed = Step2DAnitescu(s, cmd, p);
    EXPECT_EQ(exact.diagnostics.mode, relaxed.diagnostics.mode)
        << cmd.transpose();
    EXPECT_LE((exact.next.AsVector() - relaxed.next.AsVector())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-6)
        << cmd.transpose();
    EXPECT_NEAR(exact.diagnostics.normal_impulse,
                relaxed.diagnostics.normal_impulse, 1e-6);
  }
}

TEST(AnitescuTest, BoundaryLayerDragsTheBox) {
  const Contact2DParams p = Params2D();
  // Sphere hovering 1 cm above the face, commanded sideways.
  const Contact2DState s{0.0, 0.0, p.contact_height() + 0.01};
  const Vector2d cmd(0.5, s.y_a);
  const Contact2DResult exact = Step2DExact(s, cmd, p);
  const Contact2DResult relaxed = Step2DAnitescu(s, cmd, p);
  EXPECT_EQ(exact.diagnostics.mode, Contact2DMode::kSeparation);
  EXPECT_EQ(exact.next.x_u, 0.0);
  EXPECT_GT(relaxed.next.x_u, 1e-3);
  EXPECT_GT(relaxed.diagnostics.gap, 0.0);
  EXPECT_EQ(relaxed.diagnostics.mode, Contact2DMode::kSlidingPositive);
  EXPECT_LE(relaxed.diagnostics.complementarity, 1e-9);
}

TEST(AnitescuTest, SlidingImpulsesOnConeEdge) {
  const Contact2DParams p = Params2D();
  const Contact2DResult r =
      Step2DAnitescu({0.0, 0.0, 0.6}, Vector2d(-1.5, 0.5), p);
  EXPECT_NEAR(std::abs(r.diagnostics.tangential_impulse),
              p.friction * r.diagnostics.normal_impulse, 1e-9);
  EXPECT_LT(r.diagnostics.tangential_impulse, 0.0);
}

TEST(Contact2DSystemTest, WrapsBothModels) {
  const Contact2DSystem exact(Params2D(), Contact2DModel::kExact);
  const Contact2DSystem relaxed(Params2D(), Contact2DModel::kAnitescu);
  const VectorXd x = Eigen::Vector3d(0.0, 0.0, 0.6);
  const VectorXd u = Eigen::Vector2d(0.2, 0.4);
  EXPECT_LE((exact.Step(x, u) - relaxed.Step(x, u)).cwiseAbs().maxCoeff(),
            1e-6);
  EXPECT_EQ(exact.name(), "contact_2d_exact");
  EXPECT_THROW(exact.Step(x, VectorXd::Zero(3)), ConfigError);
}

TEST(PenaltyTest, FormulaExamples) {
  PenaltyParams p;
  p.normal_stiffness = 100.0;
  const PenaltyForces apart = ComputePenaltyForces(0.1, 0.5, p);
  EXPECT_EQ(apart.normal, 0.0);
  EXPECT_EQ(apart.tangential, 0.0);
  const PenaltyForces pressed = ComputePenaltyForces(-0.01, 0.0, p);
  EXPECT_NEAR(pressed.normal, 1.0, 1e-15);
  EXPECT_EQ(pressed.tangential, 0.0);
  // Friction opposes sliding.
  EXPECT_LT(ComputePenaltyForces(-0.01, 0.05, p).tangential, 0.0);
  EXPECT_GT(ComputePenaltyForces(-0.01, -0.05, p).tangential, 0.0);
}

TEST(PenaltyTest, StribeckJump) {
  const PenaltyParams p;
  ASSERT_GT(p.FrictionDrop(), 0.0);
  const double phi = -0.01;
  const double fn = ComputePenaltyForces(phi, 0.0, p).normal;
  const double below = ComputePenaltyForces(phi, p.stick_slip_speed, p).tangential;
  const double above = ComputePenaltyForces(
      phi, std::nextafter(p.stick_slip_speed, 1.0), p).tangential;
  EXPECT_NEAR(above - below, p.FrictionDrop() * fn, 1e-12);
  PenaltyParams continuous = p;
  continuous.viscous_slope = p.dynamic_friction / p.stick_slip_speed;
  EXPECT_TRUE(continuous.IsContinuous());
  EXPECT_FALSE(p.IsContinuous());
}

TEST(PenaltyTest, SmoothingAppliesForceAtADistance) {
  const PenaltyParams p;
  const double sigma = 0.01;
  const SmoothedPenaltyForces f = SmoothPenaltyForces(
      sigma, 0.0, smoothing::GaussianDistribution::Isotropic(2, sigma), 10000,
      5, p);
  EXPECT_GT(f.normal, 0.0);
  EXPECT_EQ(ComputePenaltyForces(sigma, 0.0, p).normal, 0.0);
}

TEST(PenaltyTest, ZeroVarianceReducesToRawForces) {
  const PenaltyParams p;
  const SmoothedPenaltyForces f = SmoothPenaltyForces(
      -0.02, 0.05, smoothing::GaussianDistribution(MatrixXd::Zero(2, 2)), 16,
      1, p);
  const PenaltyForces raw = ComputePenaltyForces(-0.02, 0.05, p);
  EXPECT_EQ(f.normal, raw.normal);
  EXPECT_EQ(f.tangential, raw.tangential);
  EXPECT_EQ(f.tangential_variance, 0.0);
}

TEST(PenaltyStepTest, NoContactBoxStaysPut) {
  const PenaltyStep1DParams p;
  PenaltyState1D s{1.0, 0.0, 0.0};
  for (int i = 0; i < 100; ++i) s = PenaltyStep1D(s, 0.5, p).next;
  EXPECT_EQ(s.x_u, 1.0);
  EXPECT_EQ(s.v_u, 0.0);
  EXPECT_EQ(s.x_a, 0.5);
}

TEST(PenaltyStepTest, StaticPenetrationBalancesSpring) {
  PenaltyStep1DParams p;
  p.box_mass = std::numeric_limits<double>::infinity();
  PenaltyState1D s{1.0, 0.0, 0.0};
  const double command = 1.2;
  for (int i = 0; i < 10; ++i) s = PenaltyStep1D(s, command, p).next;
  const double depth = s.x_a - s.x_u;
  const double spring = p.robot_stiffness * (command - s.x_a);
  EXPECT_EQ(s.x_u, 1.0);
  EXPECT_NEAR(depth, spring / p.normal_stiffness, 1e-14);
  EXPECT_GT(depth, 0.0);
}

TEST(PenaltyStepTest, ImpulseMatchesMomentumGain) {
  PenaltyStep1DParams p;
  p.box_mass = 1.0;
  p.normal_stiffness = 1000.0;
  p.timestep = 0.05 / std::sqrt(p.normal_stiffness / p.box_mass);
  PenaltyState1D s{1.0, 0.0, 0.0};
  double impulse = 0.0;
  for (int i = 0; i < 400; ++i) {
    const PenaltyStep1DResult r = PenaltyStep1D(s, i < 200 ? 1.1 : 0.0, p);
    impulse += p.timestep * r.normal_force;
    s = r.next;
  }
  ASSERT_GT(impulse, 0.0);
  EXPECT_NEAR(p.box_mass * s.v_u, impulse, 0.02 * impulse);
}

TEST(PenaltyStepTest, Preconditions) {
  PenaltyStep1DParams p;
  p.timestep = 0.1;  // h sqrt(k_n/m) = 3.16
  EXPECT_THROW(PenaltyStep1D({}, 0.0, p), ConfigError);
  EXPECT_THROW(PenaltyStep1D({0.0, 0.0, 0.0}, 1e8, PenaltyStep1DParams{}),
               DivergedError);
}

}  // namespace
}  // namespace bundleopt::contact
