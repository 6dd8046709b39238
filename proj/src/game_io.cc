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

#include "gamedyn/game_io.h"

#include <fstream>

#include "gamedyn/errors.h"

namespace gamedyn {

nlohmann::json GameToJson(const GameSpec& game) {
  nlohmann::json doc;
  doc["players"] = game.player_count();
  doc["action_counts"] = game.action_counts();
  doc["payoffs"] = game.payoffs();
  doc["kind"] =
      game.kind() == GameKind::kPopulation ? "population" : "normal_form";
  if (!game.name().empty()) doc["name"] = game.name();
  if (game.linear_map() && game.kind() == GameKind::kNormalForm) {
    const Eigen::MatrixXd& phi = *game.linear_map();
    std::vector<double> flat;
    flat.reserve(phi.size());
    for (int i = 0; i < phi.rows(); ++i) {
      for (int j = 0; j < phi.cols(); ++j) flat.push_back(phi(i, j));
    }
    doc["linear_map"] = flat;
  }
  return doc;
}

GameSpec GameFromJson(const nlohmann::json& doc) {
  try {
    const std::string kind = doc.value("kind", std::string("normal_form"));
    const std::string name = doc.value("name", std::string());
    const auto counts = doc.at("action_counts").get<std::vector<int>>();
    const auto payoffs =
        doc.at("payoffs").get<std::vector<std::vector<double>>>();
    if (doc.contains("players") &&
        doc.at("players").get<int>() != static_cast<int>(counts.size())) {
      throw UsageError("'players' does not match 'action_counts'");
    }
    if (kind == "population") {
      if (counts.size() != 1 || payoffs.size() != 1) {
        throw UsageError("population game needs exactly one player");
      }
      const int n = counts[0];
      if (static_cast<int>(payoffs[0].size()) != n * n) {
        throw UsageError("population payoff array must have n*n entries");
      }
      Eigen::MatrixXd a(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = payoffs[0][i * n + j];
      }
      return GameSpec::Population(a, name);
    }
    if (kind != "normal_form") {
      throw UsageError("unknown game kind '" + kind + "'");
    }
    std::optional<Eigen::MatrixXd> phi;
    if (doc.contains("linear_map") && !doc.at("linear_map").is_null()) {
      const auto flat = doc.at("linear_map").get<std::vector<double>>();
      int n = 0;
      for (int c : counts) n += c;
      if (static_cast<int>(flat.size()) != n * n) {
        throw UsageError("linear_map must have n*n entries");
      }
      phi = Eigen::MatrixXd(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) (*phi)(i, j) = flat[i * n + j];
      }
    }
    return GameSpec::NormalForm(counts, payoffs, std::move(phi), name);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed game definition: ") + e.what());
  }
}

GameSpec ReadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open game file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("cannot parse game file '" + path + "': " + e.what());
  }
  return GameFromJson(doc);
}

void WriteGameFile(const GameSpec& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write game file '" + path + "'");
  out << GameToJson(game).dump(2) << "\n";
}

}  // namespace gamedyn
