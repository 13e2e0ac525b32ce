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
#include "bundleopt/smoothing/schedule.h"

#include <cmath>
#include <string>

#include "bundleopt/common/error.h"

namespace bundleopt::smoothing {

VarianceSchedule VarianceSchedule::Constant() {
  return VarianceSchedule(SchedulePolicy::kConstant, 1.0);
}

VarianceSchedule VarianceSchedule::Geometric(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw ConfigError("geometric schedule needs 0 < gamma < 1, got " +
                      std::to_string(gamma));
  }
  return VarianceSchedule(SchedulePolicy::kGeometric, gamma);
}

double VarianceSchedule::Factor(int k) const {
  if (k < 0) throw ConfigError("variance schedule: iteration must be >= 0");
  if (policy_ == SchedulePolicy::kConstant) return 1.0;
  return std::pow(gamma_, k);
}

MatrixXd VarianceSchedule::Apply(const MatrixXd& sigma0, int k) const {
  return Factor(k) * sigma0;
}

GaussianDistribution VarianceSchedule::Apply(const GaussianDistribution& dist0,
                                             int k) const {
  return dist0.Scaled(Factor(k));
}

SchedulePolicy ParseSchedulePolicy(std::string_view name) {
  if (name == "constant") return SchedulePolicy::kConstant;
  if (name == "geometric") return SchedulePolicy::kGeometric;
  throw ConfigError("unknown schedule policy '" + std::string(name) +
                    "' (expected constant or geometric)");
}

}  // namespace bundleopt::smoothing
