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

#ifndef GAMEDYN_STOCHASTIC_H_
#define GAMEDYN_STOCHASTIC_H_

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gamedyn/dynamics.h"
#include "gamedyn/game.h"

namespace gamedyn {

enum class EstimatorMode {
  // u_i^p = U^p(i; realized actions of the others).
  kFullInformation,
  // u_i^p = realized payoff / X_i^p at the realized action, 0 elsewhere.
  kBandit,
};

struct PayoffSample {
  // Realized joint action. For population games: (focal, opponent).
  std::vector<int> actions;
  // Realized payoff of each player (one entry for population games).
  std::vector<double> payoffs;
  // Unbiased estimate of U(X).
  Eigen::VectorXd estimate;
};

// Draws one joint pure action from X and forms the payoff estimate.
PayoffSample SamplePayoffEstimate(const GameSpec& game, const MixedProfile& x,
                                  std::mt19937_64& rng, EstimatorMode mode);

struct StochasticStepResult {
  Eigen::VectorXd z;
  MixedProfile x;
  PayoffSample sample;
};

// Z+ = Z + alpha gamma (u_hat - Z) with u_hat sampled at X = sigma(Z).
// alpha must lie in [0, 1].
StochasticStepResult StochasticStep(const Eigen::VectorXd& z,
                                    const GameSpec& game,
                                    const FirstOrderParams& params,
                                    double alpha, std::mt19937_64& rng,
                                    EstimatorMode mode);

enum class StepSchedule {
  kConstant,  // alpha_k = alpha
  kHarmonic,  // alpha_k = alpha / (k + 1)
};

struct StochasticRunOptions {
  long steps = 10000;
  double alpha = 1.0;
  StepSchedule schedule = StepSchedule::kHarmonic;
  EstimatorMode mode = EstimatorMode::kFullInformation;
  std::uint64_t seed = 0;
  int record_every = 1;
};

struct StochasticRecord {
  long k = 0;
  std::vector<int> actions;
  std::vector<double> payoffs;
  Eigen::VectorXd z;  // after the update
  Eigen::VectorXd x;
};

// Seeded run of the stochastic recursion; identical options give identical
// records.
std::vector<StochasticRecord> RunStochastic(const Eigen::VectorXd& z0,
                                            const GameSpec& game,
                                            const FirstOrderParams& params,
                                            const StochasticRunOptions& options);

}  // namespace gamedyn

#endif  // GAMEDYN_STOCHASTIC_H_
