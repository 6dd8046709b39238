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

#include "gamedyn/integrator.h"

#include <cmath>

#include "gamedyn/errors.h"

namespace gamedyn {

Trajectory Integrate(const VectorField& field, const Eigen::VectorXd& state0,
                     const IntegrationOptions& options,
                     const StrategyMap& strategy) {
  if (!(options.dt > 0.0) || !(options.t_end > 0.0)) {
    throw DomainError("dt and t_end must be positive");
  }
  if (options.record_every < 1) {
    throw DomainError("record_every must be at least 1");
  }
  if (!state0.allFinite()) {
    throw IntegrationDiverged("initial state is not finite", 0.0);
  }
  const long steps =
      std::max(1L, std::lround(options.t_end / options.dt));
  const double h = options.dt;

  Trajectory traj;
  const auto record = [&](double t, const Eigen::VectorXd& y) {
    traj.times.push_back(t);
    traj.states.push_back(y);
    if (strategy) traj.strategies.push_back(strategy(y));
  };

  Eigen::VectorXd y = state0;
  record(0.0, y);
  for (long k = 1; k <= steps; ++k) {
    const double last_good = static_cast<double>(k - 1) * h;
    // Stage inputs are checked so that a blow-up surfaces as divergence
    // rather than as a domain error from inside the field.
    const auto eval = [&](const Eigen::VectorXd& at) {
      if (!at.allFinite()) {
        throw IntegrationDiverged("state became non-finite", last_good);
      }
      return field(at);
    };
    const Eigen::VectorXd k1 = eval(y);
    const Eigen::VectorXd k2 = eval(y + 0.5 * h * k1);
    const Eigen::VectorXd k3 = eval(y + 0.5 * h * k2);
    const Eigen::VectorXd k4 = eval(y + h * k3);
    Eigen::VectorXd next = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.allFinite()) {
      throw IntegrationDiverged("state became non-finite", last_good);
    }
    y = std::move(next);
    if (k % options.record_every == 0 || k == steps) {
      record(static_cast<double>(k) * h, y);
    }
  }
  return traj;
}

}  // namespace gamedyn
