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
#ifndef BUNDLEOPT_SMOOTHING_SCHEDULE_H_
#define BUNDLEOPT_SMOOTHING_SCHEDULE_H_

#include <string_view>

#include "bundleopt/smoothing/distribution.h"

namespace bundleopt::smoothing {

enum class SchedulePolicy { kConstant, kGeometric };

// Iteration-indexed covariance shrinkage Sigma_k = eta(Sigma_0, k).
// Geometric: Sigma_k = gamma^k Sigma_0 with 0 < gamma < 1, which keeps
// sum_k |Sigma_k|^2 finite.
class VarianceSchedule {
 public:
  static VarianceSchedule Constant();
  // Throws ConfigError unless 0 < gamma < 1.
  static VarianceSchedule Geometric(double gamma);

  SchedulePolicy policy() const { return policy_; }
  double gamma() const { return gamma_; }

  // Multiplier applied to Sigma_0 at iteration k >= 0.
  double Factor(int k) const;
  MatrixXd Apply(const MatrixXd& sigma0, int k) const;
  GaussianDistribution Apply(const GaussianDistribution& dist0, int k) const;

 private:
  VarianceSchedule(SchedulePolicy policy, double gamma)
      : policy_(policy), gamma_(gamma) {}

  SchedulePolicy policy_;
  double gamma_;
};

// "constant" or "geometric". Throws ConfigError.
SchedulePolicy ParseSchedulePolicy(std::string_view name);

}  // namespace bundleopt::smoothing

#endif  // BUNDLEOPT_SMOOTHING_SCHEDULE_H_
