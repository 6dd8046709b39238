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

#ifndef GAMEDYN_GAME_H_
#define GAMEDYN_GAME_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gamedyn {

// Per-player action counts and the offsets of each player's block inside a
// concatenated vector of length n = sum of counts.
class ActionLayout {
 public:
  ActionLayout() = default;
  // Throws DomainError unless every count is at least 2.
  explicit ActionLayout(std::vector<int> counts);

  int players() const { return static_cast<int>(counts_.size()); }
  int count(int player) const { return counts_[player]; }
  int offset(int player) const { return offsets_[player]; }
  int total() const { return total_; }
  const std::vector<int>& counts() const { return counts_; }

  bool operator==(const ActionLayout& other) const {
    return counts_ == other.counts_;
  }

 private:
  std::vector<int> counts_;
  std::vector<int> offsets_;
  int total_ = 0;
};

enum class GameKind {
  // N players, payoff tensor over the joint pure-action set.
  kNormalForm,
  // One population under random matching: U(x) = A x, where A[i][j] is the
  // payoff to an agent playing i against an opponent playing j.
  kPopulation,
};

// A finite game. Payoff tensors are dense, one flat array per player in
// row-major joint-action order (player 1's index is the most significant).
// For population games there is a single n x n "tensor" indexed by
// (focal action, opponent action).
class GameSpec {
 public:
  static GameSpec NormalForm(std::vector<int> action_counts,
                             std::vector<std::vector<double>> payoffs,
                             std::optional<Eigen::MatrixXd> linear_map = {},
                             std::string name = "");
  static GameSpec Population(const Eigen::MatrixXd& matrix,
                             std::string name = "");

  GameKind kind() const { return kind_; }
  int player_count() const { return layout_.players(); }
  const ActionLayout& layout() const { return layout_; }
  const std::vector<int>& action_counts() const { return layout_.counts(); }
  int total_actions() const { return layout_.total(); }
  const std::vector<std::vector<double>>& payoffs() const { return payoffs_; }
  // The explicitly supplied linear map, if any. See LinearGameMap() for the
  // derived one.
  const std::optional<Eigen::MatrixXd>& linear_map() const {
    return linear_map_;
  }
  const std::string& name() const { return name_; }

  // Number of entries in each payoff array.
  int joint_profile_count() const { return joint_count_; }
  // Number of pure-action indices that make up a joint profile (N for
  // normal-form games, 2 for population games).
  int profile_length() const;
  int JointIndex(std::span<const int> profile) const;

 private:
  GameSpec() = default;
  void ValidateLinearMap() const;

  GameKind kind_ = GameKind::kNormalForm;
  ActionLayout layout_;
  std::vector<std::vector<double>> payoffs_;
  std::optional<Eigen::MatrixXd> linear_map_;
  std::string name_;
  int joint_count_ = 0;
};

// A point of the product of simplices: per-player blocks, each nonnegative
// and summing to one within 1e-9.
class MixedProfile {
 public:
  static constexpr double kSumTolerance = 1e-9;

  // Throws DomainError if the vector is not a valid profile for the layout.
  MixedProfile(Eigen::VectorXd values, ActionLayout layout);
  static MixedProfile Centroid(const ActionLayout& layout);

  const Eigen::VectorXd& values() const { return values_; }
  const ActionLayout& layout() const { return layout_; }
  auto block(int player) const {
    return values_.segment(layout_.offset(player), layout_.count(player));
  }
  bool IsInterior() const { return values_.minCoeff() > 0.0; }

 private:
  Eigen::VectorXd values_;
  ActionLayout layout_;
};

// Orthonormal bases of the per-player zero-sum subspaces.
struct TangentBasis {
  std::vector<Eigen::MatrixXd> blocks;  // n^p x (n^p - 1)
  Eigen::MatrixXd full;                 // n x (n - N), block diagonal
};

// Gram-Schmidt on e1-e2, e1-e3, ... per player.
TangentBasis MakeTangentBasis(const ActionLayout& layout);

// Unit vectors along the per-player all-ones directions, n x N.
Eigen::MatrixXd NormalBasis(const ActionLayout& layout);

// Payoffs of every player at a joint pure profile. For population games the
// profile is (focal action, opponent action) and a single payoff is returned.
std::vector<double> PurePayoff(const GameSpec& game,
                               std::span<const int> profile);

// The payoff vector U(x): entry (p, i) is player p's expected payoff for
// pure action i against the others' mixed strategies.
Eigen::VectorXd ExpectedPayoffVector(const GameSpec& game,
                                     const MixedProfile& x);

// Same multilinear expectation evaluated directly on a raw vector, which is
// not required to lie on the simplex. Used for Jacobian checks.
Eigen::VectorXd ExpectedPayoffVectorUnchecked(const GameSpec& game,
                                              const Eigen::VectorXd& x);

// Expected payoff of each player, x^p . U^p(x), computed from the tensor.
std::vector<double> ExpectedPayoffs(const GameSpec& game,
                                    const MixedProfile& x);

// Exact Jacobian DU(x) of the multilinear payoff vector.
Eigen::MatrixXd PayoffJacobian(const GameSpec& game, const Eigen::VectorXd& x);

// Phi with U(x) = Phi x on the simplex: the stored map if present, the
// bimatrix map [[0, A], [B^T, 0]] for two-player games, A for population
// games, otherwise nothing.
std::optional<Eigen::MatrixXd> LinearGameMap(const GameSpec& game);

// max |U^p(i)| over players and pure profiles.
double MaxAbsPayoff(const GameSpec& game);

}  // namespace gamedyn

#endif  // GAMEDYN_GAME_H_
