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

#include "gamedyn/stochastic.h"

#include "gamedyn/choice_map.h"
#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

int SampleIndex(const Eigen::Ref<const Eigen::VectorXd>& probs,
                std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = unit(rng);
  double acc = 0.0;
  for (int i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (r < acc) return i;
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace

PayoffSample SamplePayoffEstimate(const GameSpec& game, const MixedProfile& x,
                                  std::mt19937_64& rng, EstimatorMode mode) {
  if (!(x.layout() == game.layout())) {
    throw DomainError("profile layout does not match game");
  }
  const ActionLayout& layout = game.layout();
  PayoffSample sample;
  sample.estimate = Eigen::VectorXd::Zero(layout.total());

  if (game.kind() == GameKind::kPopulation) {
    const int focal = SampleIndex(x.block(0), rng);
    const int opponent = SampleIndex(x.block(0), rng);
    sample.actions = {focal, opponent};
    sample.payoffs = PurePayoff(game, sample.actions);
    if (mode == EstimatorMode::kFullInformation) {
      for (int i = 0; i < layout.count(0); ++i) {
        const int profile[] = {i, opponent};
        sample.estimate[i] = PurePayoff(game, profile)[0];
      }
    } else {
      sample.estimate[focal] = sample.payoffs[0] / x.values()[focal];
    }
    return sample;
  }

  sample.actions.resize(layout.players());
  for (int p = 0; p < layout.players(); ++p) {
    sample.actions[p] = SampleIndex(x.block(p), rng);
  }
  sample.payoffs = PurePayoff(game, sample.actions);
  for (int p = 0; p < layout.players(); ++p) {
    const int o = layout.offset(p);
    if (mode == EstimatorMode::kFullInformation) {
      std::vector<int> deviation = sample.actions;
      for (int i = 0; i < layout.count(p); ++i) {
        deviation[p] = i;
        sample.estimate[o + i] = PurePayoff(game, deviation)[p];
      }
    } else {
      const int chosen = sample.actions[p];
      // Soft-max output is strictly positive, so the division is safe.
      sample.estimate[o + chosen] = sample.payoffs[p] / x.values()[o + chosen];
    }
  }
  return sample;
}

StochasticStepResult StochasticStep(const Eigen::VectorXd& z,
                                    const GameSpec& game,
                                    const FirstOrderParams& params,
                                    double alpha, std::mt19937_64& rng,
                                    EstimatorMode mode) {
  params.Validate();
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("stochastic step size must lie in [0, 1]");
  }
  const MixedProfile x = Softmax(z, params.eps, game.layout());
  PayoffSample sample = SamplePayoffEstimate(game, x, rng, mode);
  Eigen::VectorXd next = z + alpha * params.gamma * (sample.estimate - z);
  MixedProfile next_x = Softmax(next, params.eps, game.layout());
  return {std::move(next), std::move(next_x), std::move(sample)};
}

std::vector<StochasticRecord> RunStochastic(
    const Eigen::VectorXd& z0, const GameSpec& game,
    const FirstOrderParams& params, const StochasticRunOptions& options) {
  if (options.steps < 1 || options.record_every < 1) {
    throw DomainError("steps and record_every must be positive");
  }
  std::mt19937_64 rng(options.seed);
  std::vector<StochasticRecord> records;
  Eigen::VectorXd z = z0;
  for (long k = 0; k < options.steps; ++k) {
    const double alpha = options.schedule == StepSchedule::kConstant
                             ? options.alpha
                             : options.alpha / static_cast<double>(k + 1);
    StochasticStepResult step =
        StochasticStep(z, game, params, alpha, rng, options.mode);
    z = step.z;
    if (k % options.record_every == 0 || k + 1 == options.steps) {
      records.push_back({k, std::move(step.sample.actions),
                         std::move(step.sample.payoffs), step.z,
                         step.x.values()});
    }
  }
  return records;
}

}  // namespace gamedyn
