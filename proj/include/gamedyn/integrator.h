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

#ifndef GAMEDYN_INTEGRATOR_H_
#define GAMEDYN_INTEGRATOR_H_

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace gamedyn {

using VectorField = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
// Maps a recorded state to the strategy profile it induces.
using StrategyMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct IntegrationOptions {
  double dt = 0.01;
  double t_end = 500.0;
  int record_every = 1;  // record every k-th step; the last step always
};

struct Trajectory {
  std::vector<double> times;              // strictly increasing
  std::vector<Eigen::VectorXd> states;
  std::vector<Eigen::VectorXd> strategies;  // empty without a StrategyMap
  std::vector<double> lyapunov;             // filled by callers on demand

  int size() const { return static_cast<int>(times.size()); }
};

// Fixed-step classical RK4 on an autonomous field. The step count is
// round(t_end / dt). Throws IntegrationDiverged on a non-finite state and
// DomainError on bad options.
Trajectory Integrate(const VectorField& field, const Eigen::VectorXd& state0,
                     const IntegrationOptions& options,
                     const StrategyMap& strategy = nullptr);

}  // namespace gamedyn

#endif  // GAMEDYN_INTEGRATOR_H_
