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

#ifndef GAMEDYN_EXPERIMENT_H_
#define GAMEDYN_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "gamedyn/dynamics.h"
#include "gamedyn/equilibrium.h"
#include "gamedyn/game.h"
#include "gamedyn/integrator.h"

namespace gamedyn {

enum class Scheme {
  kFirstOrder,
  kHigherOrder,
};

std::string SchemeName(Scheme scheme);
// Accepts "first-order" and "higher-order". Throws UsageError otherwise.
Scheme ParseScheme(std::string_view name);

struct SchemeConfig {
  Scheme scheme = Scheme::kFirstOrder;
  FirstOrderParams params;
  // High-pass filter K s / (s + a) for the higher-order scheme.
  double gain = 1.0;
  double pole = 1.0;
  IntegrationOptions integration;
};

// Initial scores uniform in [-1, 1]^n from a seeded mt19937_64.
Eigen::VectorXd SeededScores(int n, std::uint64_t seed);

// Integrates the configured scheme from scores z0 (filter state starts at
// zero) and records strategies.
Trajectory Simulate(const GameSpec& game, const SchemeConfig& config,
                    const Eigen::VectorXd& z0);

// The rest point when multi-start finds exactly one.
std::optional<RestPointResult> UniqueRestPoint(const GameSpec& game,
                                               Temperature eps);

// Rest point reached from z0, falling back to the multi-start set.
std::optional<RestPointResult> AnyRestPoint(const GameSpec& game,
                                            Temperature eps,
                                            const Eigen::VectorXd& z0);

}  // namespace gamedyn

#endif  // GAMEDYN_EXPERIMENT_H_
