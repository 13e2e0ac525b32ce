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
#ifndef BUNDLEOPT_SMOOTHING_TEST_FUNCTIONS_H_
#define BUNDLEOPT_SMOOTHING_TEST_FUNCTIONS_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace bundleopt::smoothing {

using Eigen::VectorXd;

enum class TestFunctionId { kWigglyQuadratic, kHeaviside, kVee, kUser };

// Scalar objective with an almost-everywhere gradient.
//
// Catalog functions are defined on the real line and extended to R^d as
// separable sums f(x) = sum_i g(x_i). Their gradients return the one-sided
// right derivative at kinks and jumps.
struct ScalarFunction {
  TestFunctionId id = TestFunctionId::kUser;
  std::string name = "user";
  std::function<double(const VectorXd&)> value;
  // Optional; zero-order estimators and the oracle fall back to central
  // differences when absent.
  std::function<VectorXd(const VectorXd&)> gradient;
  // False when f has jump discontinuities.
  bool continuous = true;
  // Per-coordinate locations of kinks or jumps. Used by the quadrature
  // oracle to split its integration panels.
  std::vector<double> breakpoints;

  double Value(const VectorXd& x) const { return value(x); }
  bool HasGradient() const { return static_cast<bool>(gradient); }
  // Analytic gradient, or central differences when none was supplied.
  VectorXd Gradient(const VectorXd& x) const;
};

// x^2 + 0.1 sin(20 x): a convex bowl with many shallow local minima.
ScalarFunction WigglyQuadratic();
// 1 if x >= 0 else 0.
ScalarFunction Heaviside();
// -1 + x if x >= 0 else 1 - x. Jumps from 1 to -1 at the origin.
ScalarFunction Vee();
ScalarFunction Constant(double c);
// a^T x.
ScalarFunction Linear(const VectorXd& a);

ScalarFunction MakeTestFunction(TestFunctionId id);

// Accepts "wiggly_quadratic", "heaviside", "vee". Throws ConfigError.
TestFunctionId ParseTestFunctionId(std::string_view name);
std::string_view ToString(TestFunctionId id);

}  // namespace bundleopt::smoothing

#endif  // BUNDLEOPT_SMOOTHING_TEST_FUNCTIONS_H_
