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

#include "gamedyn/dynamics.h"

#include <cmath>
#include <utility>

#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

void RequireScores(const Eigen::VectorXd& z, const GameSpec& game) {
  if (z.size() != game.total_actions()) {
    throw DomainError("score vector length " + std::to_string(z.size()) +
                      " does not match " +
                      std::to_string(game.total_actions()) + " actions");
  }
  if (!z.allFinite()) throw DomainError("non-finite score entry");
}

}  // namespace

void FirstOrderParams::Validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("learning rate gamma must be positive and finite");
  }
}

Eigen::VectorXd HigherOrderState::Pack() const {
  Eigen::VectorXd packed(z.size() + xi.size());
  packed << z, xi;
  return packed;
}

HigherOrderState HigherOrderState::Unpack(const Eigen::VectorXd& packed) {
  if (packed.size() % 2 != 0) {
    throw DomainError("packed higher-order state must have even length");
  }
  const auto n = packed.size() / 2;
  return {packed.head(n), packed.tail(n)};
}

Eigen::VectorXd ExpDrlField(const Eigen::VectorXd& z, const GameSpec& game,
                            const FirstOrderParams& params) {
  params.Validate();
  RequireScores(z, game);
  const MixedProfile x = Softmax(z, params.eps, game.layout());
  const Eigen::VectorXd u = ExpectedPayoffVector(game, x);
  if (params.undiscounted) return u;
  return params.gamma * (u - z);
}

HigherOrderState HExpDrlField(const HigherOrderState& state,
                              const GameSpec& game,
                              const FirstOrderParams& params,
                              const FeedbackBlock& block) {
  return HigherOrderSystem(game, params, block).Derivative(state);
}

FirstOrderSystem::FirstOrderSystem(GameSpec game, FirstOrderParams params)
    : game_(std::move(game)), params_(params) {
  params_.Validate();
}

Eigen::VectorXd FirstOrderSystem::operator()(const Eigen::VectorXd& z) const {
  return ExpDrlField(z, game_, params_);
}

MixedProfile FirstOrderSystem::Strategy(const Eigen::VectorXd& z) const {
  return Softmax(z, params_.eps, game_.layout());
}

HigherOrderSystem::HigherOrderSystem(GameSpec game, FirstOrderParams params,
                                     FeedbackBlock block)
    : game_(std::move(game)), params_(params), block_(std::move(block)) {
  params_.Validate();
  if (block_.size() != game_.total_actions()) {
    throw ConfigurationError("feedback block size " +
                             std::to_string(block_.size()) +
                             " does not match " +
                             std::to_string(game_.total_actions()) +
                             " actions");
  }
  const FeedbackBlockReport report = VerifyFeedbackBlock(block_);
  if (!report.hurwitz) {
    throw ConfigurationError("feedback block A is not Hurwitz");
  }
  if (!report.zero_dc_gain) {
    throw ConfigurationError("feedback block has nonzero DC gain");
  }
}

Eigen::VectorXd HigherOrderSystem::Adjustment(
    const HigherOrderState& state) const {
  const MixedProfile x = Softmax(state.z, params_.eps, game_.layout());
  return block_.c * state.xi + block_.d * x.values();
}

Eigen::VectorXd HigherOrderSystem::FilterRestState(
    const Eigen::VectorXd& x) const {
  return -block_.a.partialPivLu().solve(block_.b * x);
}

HigherOrderState HigherOrderSystem::Derivative(
    const HigherOrderState& state) const {
  RequireScores(state.z, game_);
  if (state.xi.size() != state.z.size() || !state.xi.allFinite()) {
    throw DomainError("filter state must be finite and match the scores");
  }
  const MixedProfile x = Softmax(state.z, params_.eps, game_.layout());
  const Eigen::VectorXd u = ExpectedPayoffVector(game_, x);
  const Eigen::VectorXd v = block_.c * state.xi + block_.d * x.values();
  HigherOrderState rate;
  rate.z = params_.gamma * (u - state.z - v);
  rate.xi = block_.a * state.xi + block_.b * x.values();
  return rate;
}

Eigen::VectorXd HigherOrderSystem::operator()(
    const Eigen::VectorXd& packed) const {
  return Derivative(HigherOrderState::Unpack(packed)).Pack();
}

MixedProfile HigherOrderSystem::Strategy(const Eigen::VectorXd& packed) const {
  return Softmax(packed.head(game_.total_actions()), params_.eps,
                 game_.layout());
}

Eigen::VectorXd InducedStrategyField(const Eigen::VectorXd& z,
                                     const GameSpec& game,
                                     const FirstOrderParams& params) {
  params.Validate();
  RequireScores(z, game);
  const ActionLayout& layout = game.layout();
  const MixedProfile x = Softmax(z, params.eps, layout);
  const Eigen::VectorXd u = ExpectedPayoffVector(game, x);
  const double rate = params.undiscounted ? 1.0 : params.gamma;
  Eigen::VectorXd xdot(z.size());
  for (int p = 0; p < layout.players(); ++p) {
    const int o = layout.offset(p);
    const int m = layout.count(p);
    const auto xp = x.block(p);
    const auto up = u.segment(o, m);
    const auto zp = z.segment(o, m);
    const Eigen::ArrayXd payoff_term =
        xp.array() * (up.array() - xp.dot(up));
    Eigen::ArrayXd score_term = Eigen::ArrayXd::Zero(m);
    if (!params.undiscounted) {
      score_term = xp.array() * (zp.array() - xp.dot(zp));
    }
    xdot.segment(o, m) =
        rate / params.eps.value() * (payoff_term - score_term).matrix();
  }
  return xdot;
}

Eigen::VectorXd InducedStrategyFieldEntropyForm(const Eigen::VectorXd& z,
                                                const GameSpec& game,
                                                const FirstOrderParams& params) {
  params.Validate();
  RequireScores(z, game);
  if (params.undiscounted) {
    throw DomainError("entropy form applies to the discounted scheme only");
  }
  const ActionLayout& layout = game.layout();
  const MixedProfile x = Softmax(z, params.eps, layout);
  const Eigen::VectorXd u = ExpectedPayoffVector(game, x);
  Eigen::VectorXd xdot(z.size());
  for (int p = 0; p < layout.players(); ++p) {
    const int o = layout.offset(p);
    const int m = layout.count(p);
    const auto xp = x.block(p);
    const auto up = u.segment(o, m);
    const Eigen::ArrayXd logs = xp.array().log();
    for (int i = 0; i < m; ++i) {
      double relative_entropy = 0.0;
      for (int j = 0; j < m; ++j) {
        relative_entropy += xp[j] * (logs[i] - logs[j]);
      }
      xdot[o + i] = params.gamma / params.eps.value() * xp[i] *
                        (up[i] - xp.dot(up)) -
                    params.gamma * xp[i] * relative_entropy;
    }
  }
  return xdot;
}

Eigen::MatrixXd SwitchRates(const Eigen::Ref<const Eigen::VectorXd>& x,
                            const Eigen::Ref<const Eigen::VectorXd>& u,
                            const Eigen::Ref<const Eigen::VectorXd>& v,
                            const Eigen::Ref<const Eigen::VectorXd>& z,
                            const FirstOrderParams& params) {
  const auto m = x.size();
  if (u.size() != m || v.size() != m || z.size() != m) {
    throw DomainError("switch-rate inputs must have equal lengths");
  }
  const Eigen::VectorXd target_rate =
      params.gamma / params.eps.value() *
      (x.array() * (u - v - z).array()).matrix();
  // Row i (the strategy being abandoned) does not affect the rate.
  return Eigen::VectorXd::Ones(m) * target_rate.transpose();
}

namespace {

Eigen::VectorXd MeanDynamics(const MixedProfile& x, const Eigen::VectorXd& u,
                             const Eigen::VectorXd& v, const Eigen::VectorXd& z,
                             const FirstOrderParams& params) {
  const ActionLayout& layout = x.layout();
  Eigen::VectorXd xdot(x.values().size());
  for (int p = 0; p < layout.players(); ++p) {
    const int o = layout.offset(p);
    const int m = layout.count(p);
    const auto xp = x.block(p);
    const Eigen::MatrixXd rho = SwitchRates(xp, u.segment(o, m),
                                            v.segment(o, m), z.segment(o, m),
                                            params);
    for (int i = 0; i < m; ++i) {
      double inflow = 0.0;
      double outflow = 0.0;
      for (int j = 0; j < m; ++j) {
        inflow += xp[j] * rho(j, i);
        outflow += rho(i, j);
      }
      xdot[o + i] = inflow - xp[i] * outflow;
    }
  }
  return xdot;
}

}  // namespace

Eigen::VectorXd RevisionProtocolField(const MixedProfile& x,
                                      const Eigen::VectorXd& z,
                                      const GameSpec& game,
                                      const FirstOrderParams& params) {
  params.Validate();
  RequireScores(z, game);
  const Eigen::VectorXd u = ExpectedPayoffVector(game, x);
  return MeanDynamics(x, u, Eigen::VectorXd::Zero(z.size()), z, params);
}

Eigen::VectorXd HigherOrderRevisionProtocolField(
    const MixedProfile& x, const HigherOrderState& state,
    const HigherOrderSystem& system) {
  RequireScores(state.z, system.game());
  const Eigen::VectorXd u = ExpectedPayoffVector(system.game(), x);
  const Eigen::VectorXd v =
      system.block().c * state.xi + system.block().d * x.values();
  return MeanDynamics(x, u, v, state.z, system.params());
}

DiscreteState EulerDiscreteStep(const Eigen::VectorXd& z, const GameSpec& game,
                                const FirstOrderParams& params, double alpha) {
  params.Validate();
  RequireScores(z, game);
  if (!(alpha > 0.0)) throw DomainError("step alpha must be positive");
  const MixedProfile x = Softmax(z, params.eps, game.layout());
  Eigen::VectorXd next =
      z + alpha * params.gamma * (ExpectedPayoffVector(game, x) - z);
  MixedProfile next_x = Softmax(next, params.eps, game.layout());
  return {std::move(next), std::move(next_x)};
}

}  // namespace gamedyn
