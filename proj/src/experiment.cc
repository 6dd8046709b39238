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

#include "gamedyn/experiment.h"

#include <random>

#include "gamedyn/errors.h"

namespace gamedyn {

std::string SchemeName(Scheme scheme) {
  return scheme == Scheme::kFirstOrder ? "first-order" : "higher-order";
}

Scheme ParseScheme(std::string_view name) {
  if (name == "first-order") return Scheme::kFirstOrder;
  if (name == "higher-order") return Scheme::kHigherOrder;
  throw UsageError("unknown scheme '" + std::string(name) +
                   "'; expected first-order or higher-order");
}

Eigen::VectorXd SeededScores(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Eigen::VectorXd z(n);
  for (int i = 0; i < n; ++i) z[i] = unit(rng);
  return z;
}

Trajectory Simulate(const GameSpec& game, const SchemeConfig& config,
                    const Eigen::VectorXd& z0) {
  if (z0.size() != game.total_actions()) {
    throw DomainError("initial scores do not match the game");
  }
  if (config.scheme == Scheme::kFirstOrder) {
    const FirstOrderSystem system(game, config.params);
    return Integrate(
        [&](const Eigen::VectorXd& z) { return system(z); }, z0,
        config.integration,
        [&](const Eigen::VectorXd& z) { return system.Strategy(z).values(); });
  }
  const HigherOrderSystem system(
      game, config.params,
      FeedbackBlock::HighPass(game.layout(), config.gain, config.pole));
  const HigherOrderState start{z0, Eigen::VectorXd::Zero(z0.size())};
  return Integrate(
      [&](const Eigen::VectorXd& y) { return system(y); }, start.Pack(),
      config.integration,
      [&](const Eigen::VectorXd& y) { return system.Strategy(y).values(); });
}

std::optional<RestPointResult> UniqueRestPoint(const GameSpec& game,
                                               Temperature eps) {
  std::vector<RestPointResult> all = MultiStartRestPoints(game, eps);
  if (all.size() != 1) return std::nullopt;
  return std::move(all.front());
}

std::optional<RestPointResult> AnyRestPoint(const GameSpec& game,
                                            Temperature eps,
                                            const Eigen::VectorXd& z0) {
  RestPointResult r = SolveRestPoint(game, eps, z0);
  if (r.found) return r;
  std::vector<RestPointResult> all = MultiStartRestPoints(game, eps);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

}  // namespace gamedyn
