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
#include "bench_cli/configs.h"

#include <limits>

#include "bundleopt/common/error.h"
#include "bundleopt/contact/contact_1d.h"
#include "bundleopt/contact/contact_systems.h"
#include "bundleopt/smoothing/schedule.h"
#include "bundleopt/systems/dubins_car.h"
#include "bundleopt/systems/linear_system.h"
#include "bundleopt/systems/pendulum.h"
#include "bundleopt/systems/quadrotor.h"

namespace bundleopt::cli {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

Grid1D ReadGrid(ObjectReader r) {
  Grid1D g;
  g.min = r.Number("min");
  g.max = r.Number("max");
  g.points = r.Integer("points", 1);
  if (g.points > 1 && !(g.max > g.min)) r.Fail("max", "must exceed min");
  r.Finish();
  return g;
}

// Shared by bundle-eval and contact-probe: a free-form description string.
void SkipDescription(ObjectReader& r) { r.String("description", ""); }

contact::Contact2DParams ReadContact2DParams(ObjectReader& r) {
  contact::Contact2DParams p;
  p.mass = r.Positive("mass", p.mass);
  p.timestep = r.Positive("timestep", p.timestep);
  p.stiffness = r.Positive("stiffness", p.stiffness);
  p.friction = r.NonNegative("friction", p.friction);
  p.box_half_height = r.Positive("box_half_height", p.box_half_height);
  p.sphere_radius = r.Positive("sphere_radius", p.sphere_radius);
  p.Validate();
  return p;
}

std::shared_ptr<const systems::DynamicalSystem> ReadSystem(ObjectReader r) {
  const std::string type = r.String("type");
  std::shared_ptr<const systems::DynamicalSystem> system;
  if (type == "linear") {
    MatrixXd A = r.Matrix("A");
    MatrixXd B = r.Matrix("B");
    if (A.rows() != A.cols()) r.Fail("A", "must be square");
    if (B.rows() != A.rows()) r.Fail("B", "must have as many rows as A");
    VectorXd c = r.OptionalVector("c", static_cast<int>(A.rows()))
                     .value_or(VectorXd::Zero(A.rows()));
    system = std::make_shared<systems::LinearSystem>(A, B, c);
  } else if (type == "pendulum") {
    systems::PendulumParams p;
    p.mass = r.Positive("mass", p.mass);
    p.length = r.Positive("length", p.length);
    p.gravity = r.NonNegative("gravity", p.gravity);
    p.damping = r.NonNegative("damping", p.damping);
    p.timestep = r.Positive("timestep", p.timestep);
    system = std::make_shared<systems::Pendulum>(p);
  } else if (type == "dubins") {
    system = std::make_shared<systems::DubinsCar>(r.Positive("timestep", 0.1));
  } else if (type == "quadrotor") {
    systems::QuadrotorParams p;
    p.mass = r.Positive("mass", p.mass);
    p.arm_length = r.Positive("arm_length", p.arm_length);
    p.inertia_x = r.Positive("inertia_x", p.inertia_x);
    p.inertia_y = r.Positive("inertia_y", p.inertia_y);
    p.inertia_z = r.Positive("inertia_z", p.inertia_z);
    p.yaw_coefficient = r.NonNegative("yaw_coefficient", p.yaw_coefficient);
    p.gravity = r.NonNegative("gravity", p.gravity);
    p.timestep = r.Positive("timestep", p.timestep);
    system = std::make_shared<systems::Quadrotor>(p);
  } else if (type == "contact_1d") {
    contact::Contact1DParams p;
    p.mass = r.Positive("mass", p.mass);
    p.timestep = r.Positive("timestep", p.timestep);
    p.stiffness = r.Positive("stiffness", p.stiffness);
    system = std::make_shared<contact::Contact1DSystem>(p);
  } else if (type == "contact_2d") {
    const std::string model = r.String("model", "exact");
    contact::Contact2DModel m;
    if (model == "exact") {
      m = contact::Contact2DModel::kExact;
    } else if (model == "anitescu") {
      m = contact::Contact2DModel::kAnitescu;
    } else {
      r.Fail("model", "expected 'exact' or 'anitescu'");
    }
    system = std::make_shared<contact::Contact2DSystem>(
        ReadContact2DParams(r), m);
  } else {
    r.Fail("type",
           "unknown system '" + type +
               "' (expected linear, pendulum, dubins, quadrotor, contact_1d "
               "or contact_2d)");
  }
  r.Finish();
  return system;
}

// Box bounds lower <= v <= upper as rows of C v <= d. Either side may be
// omitted.
irs_lqr::LinearConstraint ReadBounds(ObjectReader r, int size) {
  std::optional<VectorXd> lower = r.OptionalVector("lower", size);
  std::optional<VectorXd> upper = r.OptionalVector("upper", size);
  r.Finish();
  if (lower && upper && (lower->array() > upper->array()).any()) {
    r.Fail("lower", "exceeds upper");
  }
  const int rows = (lower ? size : 0) + (upper ? size : 0);
  irs_lqr::LinearConstraint c{MatrixXd::Zero(rows, size), VectorXd(rows)};
  int row = 0;
  if (upper) {
    c.C.middleRows(row, size).setIdentity();
    c.d.segment(row, size) = *upper;
    row += size;
  }
  if (lower) {
    c.C.middleRows(row, size) = -MatrixXd::Identity(size, size);
    c.d.segment(row, size) = -*lower;
  }
  return c;
}

}  // namespace

double Grid1D::At(int i) const {
  if (points == 1) return min;
  return min + (max - min) * i / (points - 1);
}

std::vector<std::uint64_t> PlanConfig::Seeds() const {
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < num_seeds; ++i) seeds.push_back(seed + i);
  return seeds;
}

BundleEvalConfig ParseBundleEvalConfig(const Json& json) {
  ObjectReader r(json, "");
  SkipDescription(r);
  BundleEvalConfig c;
  const std::string name = r.String("function");
  if (name == "constant") {
    c.function = smoothing::Constant(r.Number("constant_value", 1.0));
  } else {
    try {
      c.function = smoothing::MakeTestFunction(
          smoothing::ParseTestFunctionId(name));
    } catch (const ConfigError& e) {
      r.Fail("function", e.what());
    }
  }
  c.sigma = r.Positive("sigma");
  c.sample_count = r.Integer("sample_count", 2, c.sample_count);
  c.grid = ReadGrid(r.Child("grid"));
  c.quadrature_points = r.Integer("quadrature_points", 1, c.quadrature_points);
  c.seed = r.Seed("seed", 0);
  r.Finish();
  return c;
}

PlanConfig ParsePlanConfig(const Json& json) {
  ObjectReader r(json, "");
  SkipDescription(r);
  const std::string task = r.String("task");
  auto system = ReadSystem(r.Child("system"));
  const int n = system->state_dim();
  const int m = system->input_dim();
  const int T = r.Integer("horizon", 1);

  ObjectReader cost = r.Child("cost");
  MatrixXd Q = cost.SquareMatrix("Q", n);
  MatrixXd R = cost.SquareMatrix("R", m);
  MatrixXd Qd = cost.SquareMatrix("Qd", n);
  VectorXd goal = cost.Vector("goal", n);
  cost.Finish();

  irs_lqr::LinearConstraint input_bounds, state_bounds;
  if (auto constraints = r.OptionalChild("constraints")) {
    if (auto in = constraints->OptionalChild("input")) {
      input_bounds = ReadBounds(*in, m);
    }
    if (auto st = constraints->OptionalChild("state")) {
      state_bounds = ReadBounds(*st, n);
    }
    constraints->Finish();
  }

  PlanConfig c{task,
               system,
               irs_lqr::MpcSpec::TimeInvariant(T, Q, R, Qd, goal, input_bounds,
                                               state_bounds),
               r.Vector("x0", n),
               {},
               {},
               0,
               1,
               {}};
  c.initial_inputs.assign(T, r.Vector("initial_input", m));

  for (const std::string& name : r.StringList("modes")) {
    try {
      c.modes.push_back(irs_lqr::ParseGradientMode(name));
    } catch (const ConfigError& e) {
      r.Fail("modes", e.what());
    }
  }

  irs_lqr::IrsLqrOptions& o = c.options;
  o.sample_count = r.Integer("sample_count", 1, o.sample_count);
  ObjectReader cov = r.Child("covariance");
  const double state_sigma = cov.NonNegative("state_sigma", 0.0);
  const double input_sigma = cov.NonNegative("input_sigma", 0.0);
  cov.Finish();
  o.covariance0 = MatrixXd::Zero(n + m, n + m);
  o.covariance0.diagonal().head(n).setConstant(state_sigma * state_sigma);
  o.covariance0.diagonal().tail(m).setConstant(input_sigma * input_sigma);

  if (auto sched = r.OptionalChild("schedule")) {
    const std::string policy = sched->String("policy");
    if (policy == "constant") {
      o.schedule = smoothing::VarianceSchedule::Constant();
    } else if (policy == "geometric") {
      const double gamma = sched->Number("gamma");
      if (!(gamma > 0.0 && gamma < 1.0)) {
        sched->Fail("gamma", "must lie in (0, 1)");
      }
      o.schedule = smoothing::VarianceSchedule::Geometric(gamma);
    } else {
      sched->Fail("policy", "expected 'constant' or 'geometric'");
    }
    sched->Finish();
  }
  o.max_iterations = r.Integer("max_iterations", 0, o.max_iterations);
  o.convergence_tolerance =
      r.NonNegative("convergence_tolerance", o.convergence_tolerance);
  c.seed = r.Seed("seed", 0);
  c.num_seeds = r.Integer("num_seeds", 1, 1);
  r.Finish();
  return c;
}

ContactProbeConfig ParseContactProbeConfig(const Json& json) {
  ObjectReader r(json, "");
  SkipDescription(r);
  ContactProbeConfig c;
  if (auto params = r.OptionalChild("params")) {
    c.params = ReadContact2DParams(*params);
    params->Finish();
  }
  const VectorXd state =
      r.OptionalVector("state", 3)
          .value_or(Eigen::Vector3d(0.0, 0.0, c.params.contact_height()));
  c.state = contact::Contact2DState::FromVector(state);
  ObjectReader grid = r.Child("grid");
  c.x_grid = ReadGrid(grid.Child("x"));
  c.y_offset_grid = ReadGrid(grid.Child("y_offset"));
  grid.Finish();
  c.sigma = r.Positive("sigma");
  ObjectReader bundle = r.Child("bundle");
  const std::string method = bundle.String("method", "quadrature");
  if (method == "quadrature") {
    c.method = BundleMethod::kQuadrature;
  } else if (method == "monte_carlo") {
    c.method = BundleMethod::kMonteCarlo;
  } else {
    bundle.Fail("method", "expected 'quadrature' or 'monte_carlo'");
  }
  c.quadrature_points =
      bundle.Integer("quadrature_points", 1, c.quadrature_points);
  c.sample_count = bundle.Integer("sample_count", 1, c.sample_count);
  bundle.Finish();
  c.seed = r.Seed("seed", 0);
  r.Finish();
  return c;
}

}  // namespace bundleopt::cli
