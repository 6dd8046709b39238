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

#include "gamedyn/game.h"

#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

constexpr double kLinearMapTolerance = 1e-12;

// Advances a mixed-radix counter; returns false after the last profile.
bool NextProfile(std::vector<int>& profile, const std::vector<int>& radix) {
  for (int k = static_cast<int>(profile.size()) - 1; k >= 0; --k) {
    if (++profile[k] < radix[k]) return true;
    profile[k] = 0;
  }
  return false;
}

Eigen::MatrixXd PopulationMatrix(const GameSpec& game) {
  const int n = game.total_actions();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = game.payoffs()[0][i * n + j];
  }
  return a;
}

}  // namespace

ActionLayout::ActionLayout(std::vector<int> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty()) throw DomainError("action layout has no players");
  offsets_.reserve(counts_.size());
  for (int c : counts_) {
    if (c < 2) {
      throw DomainError("every player needs at least 2 actions, got " +
                        std::to_string(c));
    }
    offsets_.push_back(total_);
    total_ += c;
  }
}

GameSpec GameSpec::NormalForm(std::vector<int> action_counts,
                              std::vector<std::vector<double>> payoffs,
                              std::optional<Eigen::MatrixXd> linear_map,
                              std::string name) {
  GameSpec game;
  game.kind_ = GameKind::kNormalForm;
  game.layout_ = ActionLayout(std::move(action_counts));
  game.joint_count_ = 1;
  for (int c : game.layout_.counts()) game.joint_count_ *= c;
  if (static_cast<int>(payoffs.size()) != game.layout_.players()) {
    throw DomainError("expected one payoff array per player");
  }
  for (const auto& table : payoffs) {
    if (static_cast<int>(table.size()) != game.joint_count_) {
      throw DomainError("payoff array has " + std::to_string(table.size()) +
                        " entries, expected " +
                        std::to_string(game.joint_count_));
    }
    for (double v : table) {
      if (!std::isfinite(v)) throw DomainError("non-finite payoff entry");
    }
  }
  game.payoffs_ = std::move(payoffs);
  game.name_ = std::move(name);
  game.linear_map_ = std::move(linear_map);
  game.ValidateLinearMap();
  return game;
}

GameSpec GameSpec::Population(const Eigen::MatrixXd& matrix,
                              std::string name) {
  if (matrix.rows() != matrix.cols()) {
    throw DomainError("population payoff matrix must be square");
  }
  if (!matrix.allFinite()) throw DomainError("non-finite payoff entry");
  GameSpec game;
  game.kind_ = GameKind::kPopulation;
  const int n = static_cast<int>(matrix.rows());
  game.layout_ = ActionLayout({n});
  game.joint_count_ = n * n;
  std::vector<double> flat(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) flat[i * n + j] = matrix(i, j);
  }
  game.payoffs_ = {std::move(flat)};
  game.linear_map_ = matrix;
  game.name_ = std::move(name);
  return game;
}

int GameSpec::profile_length() const {
  return kind_ == GameKind::kPopulation ? 2 : player_count();
}

int GameSpec::JointIndex(std::span<const int> profile) const {
  if (static_cast<int>(profile.size()) != profile_length()) {
    throw DomainError("profile has " + std::to_string(profile.size()) +
                      " entries, expected " +
                      std::to_string(profile_length()));
  }
  int index = 0;
  for (int k = 0; k < profile_length(); ++k) {
    const int radix = kind_ == GameKind::kPopulation ? layout_.count(0)
                                                     : layout_.count(k);
    if (profile[k] < 0 || profile[k] >= radix) {
      throw DomainError("action index " + std::to_string(profile[k]) +
                        " out of range for position " + std::to_string(k));
    }
    index = index * radix + profile[k];
  }
  return index;
}

void GameSpec::ValidateLinearMap() const {
  if (!linear_map_) return;
  const int n = total_actions();
  if (linear_map_->rows() != n || linear_map_->cols() != n) {
    throw DomainError("linear map must be " + std::to_string(n) + " x " +
                      std::to_string(n));
  }
  std::mt19937_64 rng(0x5eed);
  std::exponential_distribution<double> exp1(1.0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd x(n);
    for (int p = 0; p < layout_.players(); ++p) {
      double sum = 0.0;
      for (int i = 0; i < layout_.count(p); ++i) {
        x[layout_.offset(p) + i] = exp1(rng);
        sum += x[layout_.offset(p) + i];
      }
      x.segment(layout_.offset(p), layout_.count(p)) /= sum;
    }
    const Eigen::VectorXd diff =
        ExpectedPayoffVectorUnchecked(*this, x) - (*linear_map_) * x;
    if (diff.lpNorm<Eigen::Infinity>() > kLinearMapTolerance) {
      std::ostringstream msg;
      msg << "linear map disagrees with payoff tensor by "
          << diff.lpNorm<Eigen::Infinity>();
      throw DomainError(msg.str());
    }
  }
}

MixedProfile::MixedProfile(Eigen::VectorXd values, ActionLayout layout)
    : values_(std::move(values)), layout_(std::move(layout)) {
  if (values_.size() != layout_.total()) {
    throw DomainError("profile length " + std::to_string(values_.size()) +
                      " does not match layout total " +
                      std::to_string(layout_.total()));
  }
  for (int p = 0; p < layout_.players(); ++p) {
    const auto b = block(p);
    if (!b.allFinite() || b.minCoeff() < 0.0) {
      throw DomainError("profile block " + std::to_string(p) +
                        " has negative or non-finite entries");
    }
    if (std::abs(b.sum() - 1.0) > kSumTolerance) {
      throw DomainError("profile block " + std::to_string(p) +
                        " does not sum to 1");
    }
  }
}

MixedProfile MixedProfile::Centroid(const ActionLayout& layout) {
  Eigen::VectorXd x(layout.total());
  for (int p = 0; p < layout.players(); ++p) {
    x.segment(layout.offset(p), layout.count(p))
        .setConstant(1.0 / layout.count(p));
  }
  return MixedProfile(std::move(x), layout);
}

TangentBasis MakeTangentBasis(const ActionLayout& layout) {
  TangentBasis basis;
  const int n = layout.total();
  basis.full = Eigen::MatrixXd::Zero(n, n - layout.players());
  int col = 0;
  for (int p = 0; p < layout.players(); ++p) {
    const int m = layout.count(p);
    Eigen::MatrixXd e(m, m - 1);
    for (int k = 1; k < m; ++k) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(m);
      v[0] = 1.0;
      v[k] = -1.0;
      for (int j = 0; j < k - 1; ++j) v -= e.col(j).dot(v) * e.col(j);
      e.col(k - 1) = v.normalized();
    }
    basis.full.block(layout.offset(p), col, m, m - 1) = e;
    col += m - 1;
    basis.blocks.push_back(std::move(e));
  }
  return basis;
}

Eigen::MatrixXd NormalBasis(const ActionLayout& layout) {
  Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(layout.total(),
                                                 layout.players());
  for (int p = 0; p < layout.players(); ++p) {
    normal.block(layout.offset(p), p, layout.count(p), 1)
        .setConstant(1.0 / std::sqrt(static_cast<double>(layout.count(p))));
  }
  return normal;
}

std::vector<double> PurePayoff(const GameSpec& game,
                               std::span<const int> profile) {
  const int index = game.JointIndex(profile);
  std::vector<double> out;
  out.reserve(game.payoffs().size());
  for (const auto& table : game.payoffs()) out.push_back(table[index]);
  return out;
}

Eigen::VectorXd ExpectedPayoffVectorUnchecked(const GameSpec& game,
                                              const Eigen::VectorXd& x) {
  const ActionLayout& layout = game.layout();
  if (x.size() != layout.total()) {
    throw DomainError("profile length does not match game");
  }
  if (game.kind() == GameKind::kPopulation) return PopulationMatrix(game) * x;

  const int players = layout.players();
  Eigen::VectorXd u = Eigen::VectorXd::Zero(layout.total());
  std::vector<int> profile(players, 0);
  std::vector<double> prefix(players + 1), suffix(players + 1);
  int index = 0;
  do {
    prefix[0] = 1.0;
    for (int p = 0; p < players; ++p) {
      prefix[p + 1] = prefix[p] * x[layout.offset(p) + profile[p]];
    }
    suffix[players] = 1.0;
    for (int p = players - 1; p >= 0; --p) {
      suffix[p] = suffix[p + 1] * x[layout.offset(p) + profile[p]];
    }
    for (int p = 0; p < players; ++p) {
      u[layout.offset(p) + profile[p]] +=
          game.payoffs()[p][index] * prefix[p] * suffix[p + 1];
    }
    ++index;
  } while (NextProfile(profile, layout.counts()));
  return u;
}

Eigen::VectorXd ExpectedPayoffVector(const GameSpec& game,
                                     const MixedProfile& x) {
  if (!(x.layout() == game.layout())) {
    throw DomainError("profile layout does not match game");
  }
  return ExpectedPayoffVectorUnchecked(game, x.values());
}

std::vector<double> ExpectedPayoffs(const GameSpec& game,
                                    const MixedProfile& x) {
  if (!(x.layout() == game.layout())) {
    throw DomainError("profile layout does not match game");
  }
  const ActionLayout& layout = game.layout();
  if (game.kind() == GameKind::kPopulation) {
    const Eigen::VectorXd& v = x.values();
    return {v.dot(PopulationMatrix(game) * v)};
  }
  std::vector<double> out(layout.players(), 0.0);
  std::vector<int> profile(layout.players(), 0);
  int index = 0;
  do {
    double weight = 1.0;
    for (int p = 0; p < layout.players(); ++p) {
      weight *= x.values()[layout.offset(p) + profile[p]];
    }
    for (int p = 0; p < layout.players(); ++p) {
      out[p] += game.payoffs()[p][index] * weight;
    }
    ++index;
  } while (NextProfile(profile, layout.counts()));
  return out;
}

Eigen::MatrixXd PayoffJacobian(const GameSpec& game,
                               const Eigen::VectorXd& x) {
  const ActionLayout& layout = game.layout();
  if (x.size() != layout.total()) {
    throw DomainError("profile length does not match game");
  }
  if (game.kind() == GameKind::kPopulation) return PopulationMatrix(game);

  const int players = layout.players();
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(layout.total(), layout.total());
  std::vector<int> profile(players, 0);
  int index = 0;
  do {
    for (int p = 0; p < players; ++p) {
      const double payoff = game.payoffs()[p][index];
      if (payoff == 0.0) continue;
      for (int q = 0; q < players; ++q) {
        if (q == p) continue;
        double weight = 1.0;
        for (int r = 0; r < players; ++r) {
          if (r != p && r != q) weight *= x[layout.offset(r) + profile[r]];
        }
        jac(layout.offset(p) + profile[p], layout.offset(q) + profile[q]) +=
            payoff * weight;
      }
    }
    ++index;
  } while (NextProfile(profile, layout.counts()));
  return jac;
}

std::optional<Eigen::MatrixXd> LinearGameMap(const GameSpec& game) {
  if (game.linear_map()) return game.linear_map();
  if (game.kind() == GameKind::kPopulation) return PopulationMatrix(game);
  if (game.player_count() != 2) return std::nullopt;
  // U^1(x) = A x^2 and U^2(x) = B^T x^1 with A, B read off the tensors.
  const int n1 = game.layout().count(0);
  const int n2 = game.layout().count(1);
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(n1 + n2, n1 + n2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      phi(i, n1 + j) = game.payoffs()[0][i * n2 + j];
      phi(n1 + j, i) = game.payoffs()[1][i * n2 + j];
    }
  }
  return phi;
}

double MaxAbsPayoff(const GameSpec& game) {
  double m = 0.0;
  for (const auto& table : game.payoffs()) {
    for (double v : table) m = std::max(m, std::abs(v));
  }
  return m;
}

}  // namespace gamedyn
