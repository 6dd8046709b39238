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

#include "gamedyn/convergence.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

double Amplitude(const std::vector<Eigen::VectorXd>& xs, int begin, int end) {
  if (end - begin < 1) return 0.0;
  Eigen::VectorXd lo = xs[begin];
  Eigen::VectorXd hi = xs[begin];
  for (int k = begin + 1; k < end; ++k) {
    lo = lo.cwiseMin(xs[k]);
    hi = hi.cwiseMax(xs[k]);
  }
  return (hi - lo).maxCoeff();
}

}  // namespace

std::string StatusName(ConvergenceStatus status) {
  switch (status) {
    case ConvergenceStatus::kConverged:
      return "converged";
    case ConvergenceStatus::kLimitCycle:
      return "limit-cycle";
    case ConvergenceStatus::kUndetermined:
      return "undetermined";
  }
  return "undetermined";
}

ConvergenceReport AnalyzeConvergence(const Trajectory& traj,
                                     const std::optional<Eigen::VectorXd>& x_star,
                                     const ConvergenceOptions& options) {
  if (traj.size() < 2 || traj.strategies.size() != traj.times.size()) {
    throw UsageError("convergence analysis needs recorded strategies");
  }
  const double t0 = traj.times.front();
  const double t1 = traj.times.back();
  const double span = t1 - t0;
  const double window = options.window.value_or(0.2 * span);
  if (!(window > 0.0) || window > span) {
    throw UsageError("analysis window longer than the trajectory");
  }
  ConvergenceReport report;
  report.window_start = t1 - window;
  const double middle = t1 - 0.5 * window;
  const auto& times = traj.times;
  const int begin = static_cast<int>(
      std::lower_bound(times.begin(), times.end(), report.window_start) -
      times.begin());
  const int mid = static_cast<int>(
      std::lower_bound(times.begin(), times.end(), middle) - times.begin());
  const int end = traj.size();

  report.amplitude = Amplitude(traj.strategies, begin, end);
  report.first_half_amplitude = Amplitude(traj.strategies, begin, mid);
  report.second_half_amplitude = Amplitude(traj.strategies, mid, end);
  const double larger =
      std::max(report.first_half_amplitude, report.second_half_amplitude);
  report.drift =
      larger > 0.0
          ? std::abs(report.second_half_amplitude -
                     report.first_half_amplitude) / larger
          : 0.0;
  report.terminal_x = traj.strategies.back();
  report.terminal_distance = std::numeric_limits<double>::quiet_NaN();
  bool near = true;
  if (x_star) {
    report.terminal_distance =
        (report.terminal_x - *x_star).lpNorm<Eigen::Infinity>();
    near = report.terminal_distance < options.terminal_distance;
  }

  if (report.amplitude < options.converged_amplitude && near) {
    report.status = ConvergenceStatus::kConverged;
  } else if (report.amplitude > options.cycle_amplitude &&
             report.drift < options.cycle_drift) {
    report.status = ConvergenceStatus::kLimitCycle;
  } else {
    report.status = ConvergenceStatus::kUndetermined;
  }
  return report;
}

double TimeToReach(const Trajectory& traj, const Eigen::VectorXd& x_star,
                   double threshold) {
  double reached = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0; k < static_cast<int>(traj.strategies.size()); ++k) {
    const bool inside =
        (traj.strategies[k] - x_star).lpNorm<Eigen::Infinity>() < threshold;
    if (inside && std::isnan(reached)) reached = traj.times[k];
    if (!inside) reached = std::numeric_limits<double>::quiet_NaN();
  }
  return reached;
}

}  // namespace gamedyn
