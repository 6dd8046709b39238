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

#include "gamedyn/presets.h"

#include <algorithm>
#include <functional>

#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

Eigen::Matrix2d MatchingPenniesMatrix(double k) {
  Eigen::Matrix2d a;
  a << k, -k, -k, k;
  return a;
}

// Tensor of a polymatrix game: U^p(i) = sum over q of M[p][q](i_p, i_q).
GameSpec Polymatrix(const std::vector<int>& counts,
                    const std::vector<std::vector<Eigen::MatrixXd>>& blocks,
                    std::string name) {
  const int players = static_cast<int>(counts.size());
  int joint = 1;
  for (int c : counts) joint *= c;
  std::vector<std::vector<double>> payoffs(players,
                                           std::vector<double>(joint, 0.0));
  std::vector<int> profile(players, 0);
  for (int index = 0; index < joint; ++index) {
    int rest = index;
    for (int p = players - 1; p >= 0; --p) {
      profile[p] = rest % counts[p];
      rest /= counts[p];
    }
    for (int p = 0; p < players; ++p) {
      for (int q = 0; q < players; ++q) {
        if (blocks[p][q].size() == 0) continue;
        payoffs[p][index] += blocks[p][q](profile[p], profile[q]);
      }
    }
  }
  int n = 0;
  std::vector<int> offsets;
  for (int c : counts) {
    offsets.push_back(n);
    n += c;
  }
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(n, n);
  for (int p = 0; p < players; ++p) {
    for (int q = 0; q < players; ++q) {
      if (blocks[p][q].size() == 0) continue;
      phi.block(offsets[p], offsets[q], counts[p], counts[q]) = blocks[p][q];
    }
  }
  return GameSpec::NormalForm(counts, std::move(payoffs), std::move(phi),
                              std::move(name));
}

GameSpec JordanMatchingPennies() {
  // Player 1 wants to match player 2, player 2 wants to match player 3,
  // player 3 wants to mismatch player 1. Action 0 = H, 1 = T.
  std::vector<std::vector<double>> payoffs(3, std::vector<double>(8));
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int i2 = 0; i2 < 2; ++i2) {
      for (int i3 = 0; i3 < 2; ++i3) {
        const int index = (i1 * 2 + i2) * 2 + i3;
        payoffs[0][index] = i1 == i2 ? 1.0 : -1.0;
        payoffs[1][index] = i2 == i3 ? 1.0 : -1.0;
        payoffs[2][index] = i3 != i1 ? 1.0 : -1.0;
      }
    }
  }
  Eigen::MatrixXd phi(6, 6);
  phi << 0, 0, 1, -1, 0, 0,   //
      0, 0, -1, 1, 0, 0,      //
      0, 0, 0, 0, 1, -1,      //
      0, 0, 0, 0, -1, 1,      //
      -1, 1, 0, 0, 0, 0,      //
      1, -1, 0, 0, 0, 0;
  return GameSpec::NormalForm({2, 2, 2}, std::move(payoffs), std::move(phi),
                              "jordan_mp");
}

struct PresetEntry {
  PresetInfo info;
  std::function<GameSpec(const PresetParams&)> build;
};

const std::vector<PresetEntry>& Registry() {
  static const std::vector<PresetEntry>* registry = [] {
    auto* r = new std::vector<PresetEntry>();
    r->push_back({{"rps", "single-population rock-paper-scissors, parameter l",
                   {"l"}, {}},
                  [](const PresetParams& p) {
                    return GameSpec::Population(RpsMatrix(p.at("l")), "rps");
                  }});
    r->push_back({{"anticoord123", "single-population 123 anti-coordination",
                   {}, {}},
                  [](const PresetParams&) {
                    Eigen::Matrix3d a = Eigen::Vector3d(-1, -2, -3).asDiagonal();
                    return GameSpec::Population(a, "anticoord123");
                  }});
    r->push_back({{"matching_pennies", "two-player matching pennies", {}, {}},
                  [](const PresetParams&) {
                    const Eigen::Matrix2d a = MatchingPenniesMatrix(1.0);
                    return Bimatrix(a, -a, "matching_pennies");
                  }});
    r->push_back({{"two_player_rps",
                   "two-player rock-paper-scissors, B = A^T, parameter l",
                   {"l"}, {}},
                  [](const PresetParams& p) {
                    const Eigen::Matrix3d a = RpsMatrix(p.at("l"));
                    return Bimatrix(a, a.transpose(), "two_player_rps");
                  }});
    r->push_back({{"shapley", "two-player Shapley game, B = A^T", {}, {}},
                  [](const PresetParams&) {
                    Eigen::Matrix3d a;
                    a << 0, 1, 0, 0, 0, 1, 1, 0, 0;
                    return Bimatrix(a, a.transpose(), "shapley");
                  }});
    r->push_back(
        {{"network_zero_sum_mp",
          "three-player network of zero-sum matching-pennies edges",
          {},
          {{"k12", 1.0}, {"k13", 2.0}, {"k23", 3.0}}},
         [](const PresetParams& p) {
           const Eigen::MatrixXd a12 = MatchingPenniesMatrix(p.at("k12"));
           const Eigen::MatrixXd a13 = MatchingPenniesMatrix(p.at("k13"));
           const Eigen::MatrixXd a23 = MatchingPenniesMatrix(p.at("k23"));
           const Eigen::MatrixXd none;
           return Polymatrix({2, 2, 2},
                             {{none, a12, a13},
                              {-a12.transpose(), none, a23},
                              {-a13.transpose(), -a23.transpose(), none}},
                             "network_zero_sum_mp");
         }});
    r->push_back({{"jordan_mp", "three-player Jordan matching pennies", {}, {}},
                  [](const PresetParams&) { return JordanMatchingPennies(); }});
    r->push_back({{"modified_rps_A", "monotone generalized RPS", {}, {}},
                  [](const PresetParams&) {
                    Eigen::Matrix3d a;
                    a << 0, -1, 3, 2, 0, -1, -1, 3, 0;
                    return GameSpec::Population(a, "modified_rps_A");
                  }});
    r->push_back({{"modified_rps_Abar", "hypo-monotone monocyclic RPS", {}, {}},
                  [](const PresetParams&) {
                    Eigen::Matrix3d a;
                    a << 0, -3, 1, 1, 0, -2, -3, 1, 0;
                    return GameSpec::Population(a, "modified_rps_Abar");
                  }});
    r->push_back({{"modified_jordan", "asymmetric three-player Jordan game",
                   {}, {}},
                  [](const PresetParams&) {
                    Eigen::MatrixXd m1(2, 2), m2(2, 2), m3(2, 2);
                    m1 << 0, 2, 1, 0;
                    m2 << 0, 1, 1, 0;
                    m3 << 0, 1.0 / 3.0, 1, 0;
                    const Eigen::MatrixXd none;
                    return Polymatrix({2, 2, 2},
                                      {{none, m1, none},
                                       {none, none, m2},
                                       {m3, none, none}},
                                      "modified_jordan");
                  }});
    return r;
  }();
  return *registry;
}

}  // namespace

Eigen::Matrix3d RpsMatrix(double l) {
  Eigen::Matrix3d a;
  a << 0, -l, 1, 1, 0, -l, -l, 1, 0;
  return a;
}

GameSpec Bimatrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                  std::string name) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("bimatrix payoff matrices must have equal shapes");
  }
  const int n1 = static_cast<int>(a.rows());
  const int n2 = static_cast<int>(a.cols());
  std::vector<std::vector<double>> payoffs(2, std::vector<double>(n1 * n2));
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      payoffs[0][i * n2 + j] = a(i, j);
      payoffs[1][i * n2 + j] = b(i, j);
    }
  }
  return GameSpec::NormalForm({n1, n2}, std::move(payoffs), std::nullopt,
                              std::move(name));
}

const std::vector<PresetInfo>& PresetCatalog() {
  static const std::vector<PresetInfo>* catalog = [] {
    auto* c = new std::vector<PresetInfo>();
    for (const auto& entry : Registry()) c->push_back(entry.info);
    return c;
  }();
  return *catalog;
}

GameSpec Preset(std::string_view name, const PresetParams& params) {
  const auto& registry = Registry();
  const auto it = std::find_if(
      registry.begin(), registry.end(),
      [&](const PresetEntry& e) { return e.info.name == name; });
  if (it == registry.end()) {
    std::string valid;
    for (const auto& e : registry) valid += " " + e.info.name;
    throw UsageError("unknown preset '" + std::string(name) +
                     "'; valid presets:" + valid);
  }
  PresetParams resolved;
  for (const auto& key : it->info.required_params) {
    const auto found = params.find(key);
    if (found == params.end()) {
      throw UsageError("preset '" + std::string(name) +
                       "' requires parameter '" + key + "'");
    }
    resolved[key] = found->second;
  }
  for (const auto& [key, fallback] : it->info.optional_params) {
    const auto found = params.find(key);
    resolved[key] = found == params.end() ? fallback : found->second;
  }
  for (const auto& [key, value] : params) {
    if (!resolved.count(key)) {
      throw UsageError("preset '" + std::string(name) +
                       "' does not take parameter '" + key + "'");
    }
  }
  return it->build(resolved);
}

}  // namespace gamedyn
