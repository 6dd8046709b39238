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

#ifndef GAMEDYN_DYNAMICS_H_
#define GAMEDYN_DYNAMICS_H_

#include <Eigen/Dense>

#include "gamedyn/choice_map.h"
#include "gamedyn/feedback_block.h"
#include "gamedyn/game.h"

namespace gamedyn {

struct FirstOrderParams {
  double gamma = 1.0;  // learning rate
  Temperature eps{1.0};
  // Integrate payoffs without discounting: z' = U(sigma(z)).
  bool undiscounted = false;

  // Throws DomainError unless gamma is positive and finite.
  void Validate() const;
};

struct HigherOrderState {
  Eigen::VectorXd z;   // scores
  Eigen::VectorXd xi;  // filter state

  // [z; xi], the layout the integrator works with.
  Eigen::VectorXd Pack() const;
  static HigherOrderState Unpack(const Eigen::VectorXd& packed);
};

// gamma (U(sigma(z)) - z), or U(sigma(z)) when undiscounted.
Eigen::VectorXd ExpDrlField(const Eigen::VectorXd& z, const GameSpec& game,
                            const FirstOrderParams& params);

// Time derivative of (z, xi) for the filtered scheme:
//   x = sigma(z), v = C xi + D x,
//   z' = gamma (U(x) - z - v), xi' = A xi + B x.
// Throws ConfigurationError if the block fails VerifyFeedbackBlock.
HigherOrderState HExpDrlField(const HigherOrderState& state,
                              const GameSpec& game,
                              const FirstOrderParams& params,
                              const FeedbackBlock& block);

// First-order score dynamics bound to one game. Cheap to copy.
class FirstOrderSystem {
 public:
  FirstOrderSystem(GameSpec game, FirstOrderParams params);

  Eigen::VectorXd operator()(const Eigen::VectorXd& z) const;
  MixedProfile Strategy(const Eigen::VectorXd& z) const;

  const GameSpec& game() const { return game_; }
  const FirstOrderParams& params() const { return params_; }

 private:
  GameSpec game_;
  FirstOrderParams params_;
};

// Higher-order score dynamics bound to one game and one filter. The filter
// must be Hurwitz with zero DC gain; checked once at construction.
class HigherOrderSystem {
 public:
  HigherOrderSystem(GameSpec game, FirstOrderParams params,
                    FeedbackBlock block);

  HigherOrderState Derivative(const HigherOrderState& state) const;
  // Derivative on the packed [z; xi] vector.
  Eigen::VectorXd operator()(const Eigen::VectorXd& packed) const;
  MixedProfile Strategy(const Eigen::VectorXd& packed) const;

  // v = C xi + D sigma(z).
  Eigen::VectorXd Adjustment(const HigherOrderState& state) const;
  // Filter rest state -A^{-1} B x for a strategy x.
  Eigen::VectorXd FilterRestState(const Eigen::VectorXd& x) const;

  const GameSpec& game() const { return game_; }
  const FirstOrderParams& params() const { return params_; }
  const FeedbackBlock& block() const { return block_; }

 private:
  GameSpec game_;
  FirstOrderParams params_;
  FeedbackBlock block_;
};

// Induced strategy dynamics of the first-order scheme, x = sigma(z):
//   x_i' = gamma/eps [x_i (u_i - x.u) - x_i (z_i - x.z)]  per player.
Eigen::VectorXd InducedStrategyField(const Eigen::VectorXd& z,
                                     const GameSpec& game,
                                     const FirstOrderParams& params);

// The same field written with the relative-entropy term:
//   x_i' = gamma/eps x_i (u_i - x.u) - gamma x_i sum_j x_j log(x_i / x_j).
Eigen::VectorXd InducedStrategyFieldEntropyForm(const Eigen::VectorXd& z,
                                                const GameSpec& game,
                                                const FirstOrderParams& params);

// Conditional switch rates rho_ij = gamma/eps x_j (u_j - v_j - z_j) for one
// player block. Pass v = 0 for the first-order protocol.
Eigen::MatrixXd SwitchRates(const Eigen::Ref<const Eigen::VectorXd>& x,
                            const Eigen::Ref<const Eigen::VectorXd>& u,
                            const Eigen::Ref<const Eigen::VectorXd>& v,
                            const Eigen::Ref<const Eigen::VectorXd>& z,
                            const FirstOrderParams& params);

// Mean dynamics x_i' = sum_j x_j rho_ji - x_i sum_j rho_ij with the
// "imitation of discounted success" protocol, u = U(x).
Eigen::VectorXd RevisionProtocolField(const MixedProfile& x,
                                      const Eigen::VectorXd& z,
                                      const GameSpec& game,
                                      const FirstOrderParams& params);

// Mean dynamics with the payoff-adjusted protocol of the higher-order
// scheme, v = C xi + D x taken from the filter.
Eigen::VectorXd HigherOrderRevisionProtocolField(
    const MixedProfile& x, const HigherOrderState& state,
    const HigherOrderSystem& system);

struct DiscreteState {
  Eigen::VectorXd z;
  MixedProfile x;
};

// Z+ = Z + alpha gamma (U(X) - Z), X = sigma(Z); X+ = sigma(Z+).
DiscreteState EulerDiscreteStep(const Eigen::VectorXd& z, const GameSpec& game,
                                const FirstOrderParams& params, double alpha);

}  // namespace gamedyn

#endif  // GAMEDYN_DYNAMICS_H_
