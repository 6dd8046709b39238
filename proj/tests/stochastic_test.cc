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

#include <cmath>
#include <random>

#include "doctest.h"
#include "gamedyn/choice_map.h"
#include "gamedyn/errors.h"
#include "gamedyn/presets.h"
#include "test_util.h"

namespace gamedyn {
namespace {

using testing::BruteForcePayoffVector;

// Empirical mean and standard error of the estimator over `draws` samples.
void CheckUnbiased(const GameSpec& game, const Eigen::VectorXd& z, double eps,
                   EstimatorMode mode, std::uint64_t seed) {
  const MixedProfile x = Softmax(z, Temperature(eps), game.layout());
  const Eigen::VectorXd truth = BruteForcePayoffVector(game, x.values());
  std::mt19937_64 rng(seed);
  const int draws = 100000;
  const int n = game.total_actions();
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sum_sq = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < draws; ++k) {
    const PayoffSample s = SamplePayoffEstimate(game, x, rng, mode);
    sum += s.estimate;
    sum_sq += s.estimate.cwiseProduct(s.estimate);
  }
  const Eigen::VectorXd mean = sum / draws;
  for (int i = 0; i < n; ++i) {
    const double var = sum_sq[i] / draws - mean[i] * mean[i];
    const double se = std::sqrt(std::max(var, 0.0) / draws);
    CHECK(std::abs(mean[i] - truth[i]) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("estimators are unbiased on matching pennies") {
  const GameSpec game = Preset("matching_pennies");
  Eigen::VectorXd z(4);
  z << 0.3, -0.2, 0.8, 0.1;
  CheckUnbiased(game, z, 1.0, EstimatorMode::kFullInformation, 1);
  CheckUnbiased(game, z, 1.0, EstimatorMode::kBandit, 2);
}

TEST_CASE("estimators are unbiased on population and three-player games") {
  Eigen::VectorXd z3(3);
  z3 << 0.2, -0.4, 0.5;
  CheckUnbiased(Preset("modified_rps_A"), z3, 1.0,
                EstimatorMode::kFullInformation, 3);
  CheckUnbiased(Preset("modified_rps_A"), z3, 1.0, EstimatorMode::kBandit, 4);
  Eigen::VectorXd z6(6);
  z6 << 0.2, -0.4, 0.5, 0.1, -0.3, 0.0;
  CheckUnbiased(Preset("modified_jordan"), z6, 0.5, EstimatorMode::kBandit, 5);
}

TEST_CASE("bandit estimate is nonzero only at the realized action") {
  const GameSpec game = Preset("matching_pennies");
  const MixedProfile x =
      Softmax(Eigen::VectorXd::Zero(4), Temperature(1), game.layout());
  std::mt19937_64 rng(6);
  for (int k = 0; k < 200; ++k) {
    const PayoffSample s =
        SamplePayoffEstimate(game, x, rng, EstimatorMode::kBandit);
    for (int p = 0; p < 2; ++p) {
      for (int i = 0; i < 2; ++i) {
        const double value = s.estimate[2 * p + i];
        if (i == s.actions[p]) {
          CHECK(value == s.payoffs[p] / 0.5);
          CHECK(value != 0.0);
        } else {
          CHECK(value == 0.0);
        }
      }
    }
  }
}

TEST_CASE("full-information estimate uses unilateral deviations") {
  const GameSpec game = Preset("shapley");
  const MixedProfile x =
      Softmax(Eigen::VectorXd::Zero(6), Temperature(1), game.layout());
  std::mt19937_64 rng(7);
  const PayoffSample s =
      SamplePayoffEstimate(game, x, rng, EstimatorMode::kFullInformation);
  for (int i = 0; i < 3; ++i) {
    const int p1[] = {i, s.actions[1]};
    const int p2[] = {s.actions[0], i};
    CHECK(s.estimate[i] == PurePayoff(game, p1)[0]);
    CHECK(s.estimate[3 + i] == PurePayoff(game, p2)[1]);
  }
}

TEST_CASE("stochastic step") {
  const GameSpec game = Preset("matching_pennies");
  FirstOrderParams p;
  std::mt19937_64 rng(8);
  Eigen::VectorXd z(4);
  z << 0.1, 0.2, 0.3, 0.4;
  const StochasticStepResult still =
      StochasticStep(z, game, p, 0.0, rng, EstimatorMode::kBandit);
  CHECK(still.z == z);
  CHECK_THROWS_AS(StochasticStep(z, game, p, 1.5, rng, EstimatorMode::kBandit),
                  DomainError);
  const StochasticStepResult jump =
      StochasticStep(z, game, p, 1.0, rng, EstimatorMode::kFullInformation);
  CHECK((jump.z - jump.sample.estimate).norm() < 1e-15);
}

TEST_CASE("seeded runs are reproducible and settle near the rest point") {
  const GameSpec game = Preset("matching_pennies");
  FirstOrderParams p;
  StochasticRunOptions options;
  options.steps = 20000;
  options.seed = 9;
  options.record_every = 100;
  const auto a = RunStochastic(Eigen::VectorXd::Ones(4), game, p, options);
  const auto b = RunStochastic(Eigen::VectorXd::Ones(4), game, p, options);
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].z == b[k].z);
    CHECK(a[k].actions == b[k].actions);
  }
  CHECK(a.back().k == options.steps - 1);
  // With harmonic steps the scores average toward U(x*) = 0.
  CHECK(a.back().z.lpNorm<Eigen::Infinity>() < 0.05);
  options.seed = 10;
  const auto c = RunStochastic(Eigen::VectorXd::Ones(4), game, p, options);
  CHECK(c.back().z != a.back().z);
}

}  // namespace
}  // namespace gamedyn
