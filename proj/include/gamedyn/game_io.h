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

#ifndef GAMEDYN_GAME_IO_H_
#define GAMEDYN_GAME_IO_H_

#include <string>

#include "gamedyn/game.h"
#include "json.hpp"

namespace gamedyn {

// Game definition file:
//   {"players": N, "action_counts": [...],
//    "payoffs": [[...], ...],            // per player, row-major joint order
//    "linear_map": [...],                // optional, flat n*n row-major
//    "kind": "normal_form"|"population", // optional, default normal_form
//    "name": "..."}                      // optional
// A population game has players = 1 and a single n*n payoff array indexed
// by (focal action, opponent action).
nlohmann::json GameToJson(const GameSpec& game);
GameSpec GameFromJson(const nlohmann::json& doc);

GameSpec ReadGameFile(const std::string& path);
void WriteGameFile(const GameSpec& game, const std::string& path);

}  // namespace gamedyn

#endif  // GAMEDYN_GAME_IO_H_
