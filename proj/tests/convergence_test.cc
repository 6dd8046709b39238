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

#include <cmath>

#include "doctest.h"
#include "gamedyn/dynamics.h"
#include "gamedyn/errors.h"
#include "gamedyn/presets.h"

namespace gamedyn {
namespace {

Trajectory Synthetic(const std::function<Eigen::VectorXd(double)>& x,
                     double t_end = 100.0, double dt = 0.1) {
  Trajectory traj;
  for (int k = 0; k * dt <= t_end + 1e-12; ++k) {
    const double t = k * dt;
    traj.times.push_back(t);
    traj.states.push_back(Eigen::VectorXd::Zero(2));
    traj.strategies.push_back(x(t));
  }
  return traj;
}

TEST_CASE("constant trajectory is converged") {
  const Trajectory traj = Synthetic(
      [](double) -> Eigen::VectorXd { return Eigen::Vector2d(0.3, 0.7); });
  const ConvergenceReport r = AnalyzeConvergence(traj);
  CHECK(r.status == ConvergenceStatus::kConverged);
  CHECK(r.amplitude == 0.0);
  CHECK(std::isnan(r.terminal_distance));
  CHECK(AnalyzeConvergence(traj, Eigen::VectorXd(Eigen::Vector2d(0.3, 0.7)))
            .status == ConvergenceStatus::kConverged);
  // Still, but at the wrong point.
  CHECK(AnalyzeConvergence(traj, Eigen::VectorXd(Eigen::Vector2d(0.5, 0.5)))
            .status == ConvergenceStatus::kUndetermined);
}

TEST_CASE("steady oscillation is a limit cycle") {
  const Trajectory traj = Synthetic([](double t) -> Eigen::VectorXd {
    const double s = 0.1 * std::sin(t);
    return Eigen::Vector2d(0.5 + s, 0.5 - s);
  });
  const ConvergenceReport r = AnalyzeConvergence(traj);
  CHECK(r.status == ConvergenceStatus::kLimitCycle);
  CHECK(r.amplitude == doctest::Approx(0.2).epsilon(0.01));
  CHECK(r.drift < 0.1);
}

TEST_CASE("slowly decaying oscillation is undetermined") {
  const Trajectory traj = Synthetic([](double t) -> Eigen::VectorXd {
    const double s = 0.1 * std::exp(-0.05 * t) * std::sin(5 * t);
    return Eigen::Vector2d(0.5 + s, 0.5 - s);
  });
  CHECK(AnalyzeConvergence(traj).status == ConvergenceStatus::kUndetermined);
}

TEST_CASE("window validation") {
  const Trajectory traj = Synthetic(
      [](double) -> Eigen::VectorXd { return Eigen::Vector2d(0.3, 0.7); },
      10.0);
  ConvergenceOptions options;
  options.window = 20.0;
  CHECK_THROWS_AS(AnalyzeConvergence(traj, std::nullopt, options), UsageError);
  Trajectory bare = traj;
  bare.strategies.clear();
  CHECK_THROWS_AS(AnalyzeConvergence(bare), UsageError);
}

TEST_CASE("time to reach") {
  const Trajectory traj = Synthetic([](double t) -> Eigen::VectorXd {
    const double s = std::exp(-t);
    return Eigen::Vector2d(0.5 + s, 0.5 - s);
  });
  const double t = TimeToReach(traj, Eigen::Vector2d(0.5, 0.5), 1e-3);
  CHECK(t == doctest::Approx(std::ceil(10 * std::log(1e3)) / 10).epsilon(1e-9));
  CHECK(std::isnan(TimeToReach(traj, Eigen::Vector2d(0.9, 0.1), 1e-3)));
}

Trajectory RunRps(double l, bool higher, double t_end) {
  const GameSpec game = Preset("rps", {{"l", l}});
  FirstOrderParams p;
  const Eigen::VectorXd z0 = Eigen::Vector3d(0.6, -0.3, 0.2);
  IntegrationOptions options{0.01, t_end, 10};
  if (higher) {
    const HigherOrderSystem system(
        game, p, FeedbackBlock::HighPass(game.layout(), 1.0, 1.0));
    return Integrate(
        [&](const Eigen::VectorXd& y) { return system(y); },
        HigherOrderState{z0, Eigen::VectorXd::Zero(3)}.Pack(), options,
        [&](const Eigen::VectorXd& y) { return system.Strategy(y).values(); });
  }
  const FirstOrderSystem system(game, p);
  return Integrate(
      [&](const Eigen::VectorXd& z) { return system(z); }, z0, options,
      [&](const Eigen::VectorXd& z) { return system.Strategy(z).values(); });
}

TEST_CASE("RPS l = 8: first-order cycles, higher-order converges") {
  const Eigen::VectorXd centroid = Eigen::VectorXd::Constant(3, 1.0 / 3);
  CHECK(AnalyzeConvergence(RunRps(8.0, false, 300.0), centroid).status ==
        ConvergenceStatus::kLimitCycle);
  CHECK(AnalyzeConvergence(RunRps(8.0, true, 300.0), centroid).status ==
        ConvergenceStatus::kConverged);
}

}  // namespace
}  // namespace gamedyn
