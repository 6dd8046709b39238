// Copyright 2026 The gamedyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMEDYN_CONVERGENCE_H_
#define GAMEDYN_CONVERGENCE_H_

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "gamedyn/integrator.h"

namespace gamedyn {

enum class ConvergenceStatus {
  kConverged,
  kLimitCycle,
  kUndetermined,
};

std::string StatusName(ConvergenceStatus status);

struct ConvergenceOptions {
  // Length of the trailing analysis window. Unset means 20% of the span.
  std::optional<double> window;
  double converged_amplitude = 1e-6;
  double terminal_distance = 1e-4;
  double cycle_amplitude = 1e-3;
  double cycle_drift = 0.1;
};

struct ConvergenceReport {
  ConvergenceStatus status = ConvergenceStatus::kUndetermined;
  double window_start = 0.0;
  // max over coordinates of (max - min) of x within the window.
  double amplitude = 0.0;
  double first_half_amplitude = 0.0;
  double second_half_amplitude = 0.0;
  // |second - first| / max(first, second).
  double drift = 0.0;
  // || x(T) - x_star ||_inf, or NaN without a reference.
  double terminal_distance = 0.0;
  Eigen::VectorXd terminal_x;
};

// Classifies the tail of a trajectory from its recorded strategies. Throws
// UsageError if the window is longer than the trajectory or strategies were
// not recorded.
ConvergenceReport AnalyzeConvergence(
    const Trajectory& traj, const std::optional<Eigen::VectorXd>& x_star = {},
    const ConvergenceOptions& options = {});

// First recorded time with || x(t) - x_star ||_inf < threshold that holds
// for the rest of the trajectory, or NaN if never.
double TimeToReach(const Trajectory& traj, const Eigen::VectorXd& x_star,
                   double threshold);

}  // namespace gamedyn

#endif  // GAMEDYN_CONVERGENCE_H_
