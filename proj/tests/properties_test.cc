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

// Consequences of the convergence guarantees, checked by simulation: above
// the hypo-monotonicity modulus every seed converges to the same logit
// equilibrium, for both the first-order and the filtered scheme.

#include <future>
#include <memory>
#include <random>
#include <string>

#include "doctest.h"
#include "gamedyn/classify.h"
#include "gamedyn/convergence.h"
#include "gamedyn/dynamics.h"
#include "gamedyn/equilibrium.h"
#include "gamedyn/integrator.h"
#include "test_util.h"

namespace gamedyn {
namespace {

constexpr int kSeeds = 20;

struct RunOutcome {
  ConvergenceReport report;
  Eigen::VectorXd x;
};

// Integrates in chunks from the previous end state and stops at the first
// chunk whose tail reports convergence, up to `t_max`. The field is
// autonomous, so this is the same trajectory as one long run.
RunOutcome Run(const GameSpec& game, const FirstOrderParams& params,
               bool higher, std::uint64_t seed, const Eigen::VectorXd& x_star,
               double t_max) {
  std::mt19937_64 rng(seed);
  const Eigen::VectorXd z0 =
      testing::RandomVector(game.total_actions(), 1.0, rng);
  const IntegrationOptions chunk{0.01, 200.0, 10};
  VectorField field;
  StrategyMap strategy;
  Eigen::VectorXd state;
  if (higher) {
    const auto system = std::make_shared<HigherOrderSystem>(
        game, params, FeedbackBlock::HighPass(game.layout(), 1.0, 1.0));
    field = [system](const Eigen::VectorXd& y) { return (*system)(y); };
    strategy = [system](const Eigen::VectorXd& y) {
      return system->Strategy(y).values();
    };
    state = HigherOrderState{z0, Eigen::VectorXd::Zero(z0.size())}.Pack();
  } else {
    const auto system = std::make_shared<FirstOrderSystem>(game, params);
    field = [system](const Eigen::VectorXd& z) { return (*system)(z); };
    strategy = [system](const Eigen::VectorXd& z) {
      return system->Strategy(z).values();
    };
    state = z0;
  }
  RunOutcome out;
  for (double t = 0.0; t < t_max; t += chunk.t_end) {
    const Trajectory traj = Integrate(field, state, chunk, strategy);
    state = traj.states.back();
    out.report = AnalyzeConvergence(traj, x_star);
    out.x = traj.strategies.back();
    if (out.report.status == ConvergenceStatus::kConverged) break;
  }
  return out;
}

void CheckGame(const GameSpec& game, const std::string& label) {
  const ClassificationReport cls = Classify(game);
  const double eps = cls.monotonicity == MonotonicityClass::kHypoMonotone
                         ? cls.mu_certified + 0.05
                         : 0.5;
  FirstOrderParams params;
  params.eps = Temperature(eps);
  const std::vector<RestPointResult> rest =
      MultiStartRestPoints(game, params.eps);
  REQUIRE_MESSAGE(rest.size() == 1, label);
  const Eigen::VectorXd x_star = rest.front().x;
  const double t_max = 2000.0;

  for (bool higher : {false, true}) {
    std::vector<std::future<RunOutcome>> runs;
    for (int s = 0; s < kSeeds; ++s) {
      runs.push_back(std::async(std::launch::async, Run, std::cref(game),
                                params, higher, 1000 + s, x_star, t_max));
    }
    std::vector<RunOutcome> outcomes;
    for (auto& f : runs) outcomes.push_back(f.get());
    for (const RunOutcome& o : outcomes) {
      CHECK_MESSAGE(o.report.status == ConvergenceStatus::kConverged,
                    label << (higher ? " higher-order" : " first-order")
                          << " eps=" << eps
                          << " amplitude=" << o.report.amplitude
                          << " distance=" << o.report.terminal_distance);
      CHECK((o.x - outcomes.front().x).lpNorm<Eigen::Infinity>() < 1e-4);
    }
  }
}

TEST_CASE("every preset converges above its modulus") {
  const std::vector<GameSpec> games = testing::AllPresets();
  for (size_t i = 0; i < games.size(); ++i) {
    CheckGame(games[i], games[i].name() + " #" + std::to_string(i));
  }
}

TEST_CASE("RPS l = 8 converges above its modulus") {
  CheckGame(Preset("rps", {{"l", 8.0}}), "rps l=8");
}

}  // namespace
}  // namespace gamedyn
