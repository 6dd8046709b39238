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

#ifndef GAMEDYN_PRESETS_H_
#define GAMEDYN_PRESETS_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gamedyn/game.h"

namespace gamedyn {

using PresetParams = std::map<std::string, double>;

struct PresetInfo {
  std::string name;
  std::string description;
  std::vector<std::string> required_params;
  // Optional parameters with their defaults.
  std::vector<std::pair<std::string, double>> optional_params;
};

// All preset games, in listing order.
const std::vector<PresetInfo>& PresetCatalog();

// Builds a preset game. Throws UsageError for an unknown name, a missing
// required parameter or an unrecognized parameter.
GameSpec Preset(std::string_view name, const PresetParams& params = {});

// Generalized rock-paper-scissors matrix [[0,-l,1],[1,0,-l],[-l,1,0]].
Eigen::Matrix3d RpsMatrix(double l);

// Two-player game from row-player matrix A and column-player matrix B
// (B[i][j] is player 2's payoff when player 1 plays i and player 2 plays j).
GameSpec Bimatrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                  std::string name = "");

}  // namespace gamedyn

#endif  // GAMEDYN_PRESETS_H_
