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
#include <random>

#include "doctest.h"
#include "gamedyn/errors.h"
#include "gamedyn/integrator.h"
#include "gamedyn/presets.h"
#include "test_util.h"

namespace gamedyn {
namespace {

using testing::AllPresets;
using testing::BruteForcePayoffVector;
using testing::RandomVector;

FirstOrderParams Params(double eps, double gamma = 1.0) {
  FirstOrderParams p;
  p.eps = Temperature(eps);
  p.gamma = gamma;
  return p;
}

// Oracle for the first-order field from the brute-force payoff vector.
Eigen::VectorXd FieldOracle(const Eigen::VectorXd& z, const GameSpec& game,
                            double eps, double gamma) {
  const Eigen::VectorXd x = Softmax(z, Temperature(eps), game.layout()).values();
  return gamma * (BruteForcePayoffVector(game, x) - z);
}

// A random stable block with zero DC gain: D = C A^{-1} B.
FeedbackBlock RandomZeroGainBlock(int n, std::mt19937_64& rng) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m.row(i) = RandomVector(n, 0.3, rng).transpose();
  const Eigen::MatrixXd a = m - 2.0 * Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd b(n, n), c(n, n);
  for (int i = 0; i < n; ++i) {
    b.row(i) = RandomVector(n, 1.0, rng).transpose();
    c.row(i) = RandomVector(n, 1.0, rng).transpose();
  }
  const Eigen::MatrixXd d = c * a.partialPivLu().solve(b);
  return {a, b, c, d};
}

TEST_CASE("first-order field matches the brute-force oracle") {
  std::mt19937_64 rng(21);
  for (const GameSpec& game : AllPresets()) {
    for (int s = 0; s < 10; ++s) {
      const Eigen::VectorXd z = RandomVector(game.total_actions(), 2.0, rng);
      const Eigen::VectorXd got = ExpDrlField(z, game, Params(0.7, 1.3));
      CHECK((got - FieldOracle(z, game, 0.7, 1.3)).lpNorm<Eigen::Infinity>() <
            1e-12);
    }
  }
}

TEST_CASE("first-order rest points of RPS") {
  const GameSpec l1 = Preset("rps", {{"l", 1.0}});
  CHECK(ExpDrlField(Eigen::VectorXd::Zero(3), l1, Params(1))
            .lpNorm<Eigen::Infinity>() == 0.0);
  for (double l : {1.0, 2.5, 5.0, 8.0}) {
    const GameSpec game = Preset("rps", {{"l", l}});
    const Eigen::VectorXd z = Eigen::VectorXd::Constant(3, (1 - l) / 3);
    for (double eps : {0.1, 1.0, 3.0}) {
      CHECK(ExpDrlField(z, game, Params(eps)).lpNorm<Eigen::Infinity>() <
            1e-15);
    }
  }
}

TEST_CASE("field is linear in gamma") {
  std::mt19937_64 rng(22);
  const GameSpec game = Preset("shapley");
  for (int s = 0; s < 20; ++s) {
    const Eigen::VectorXd z = RandomVector(6, 2.0, rng);
    const Eigen::VectorXd one = ExpDrlField(z, game, Params(0.5, 1.0));
    const Eigen::VectorXd four = ExpDrlField(z, game, Params(0.5, 4.0));
    CHECK((four - 4.0 * one).lpNorm<Eigen::Infinity>() < 1e-13);
  }
}

TEST_CASE("undiscounted variant integrates raw payoffs") {
  std::mt19937_64 rng(23);
  const GameSpec game = Preset("matching_pennies");
  FirstOrderParams p = Params(0.5);
  p.undiscounted = true;
  const Eigen::VectorXd z = RandomVector(4, 1.0, rng);
  const Eigen::VectorXd x = Softmax(z, p.eps, game.layout()).values();
  CHECK((ExpDrlField(z, game, p) - BruteForcePayoffVector(game, x)).norm() <
        1e-14);
}

TEST_CASE("dimension and parameter errors") {
  const GameSpec game = Preset("matching_pennies");
  CHECK_THROWS_AS(ExpDrlField(Eigen::VectorXd::Zero(3), game, Params(1)),
                  DomainError);
  FirstOrderParams bad = Params(1);
  bad.gamma = 0.0;
  CHECK_THROWS_AS(ExpDrlField(Eigen::VectorXd::Zero(4), game, bad),
                  DomainError);
  CHECK_THROWS_AS(EulerDiscreteStep(Eigen::VectorXd::Zero(4), game, Params(1),
                                    0.0),
                  DomainError);
}

TEST_CASE("higher-order field with the high-pass block") {
  std::mt19937_64 rng(24);
  for (const GameSpec& game : AllPresets()) {
    const int n = game.total_actions();
    const double k = 1.0, a = 1.0, gamma = 1.5, eps = 0.6;
    const FeedbackBlock block = FeedbackBlock::HighPass(game.layout(), k, a);
    const HigherOrderState state{RandomVector(n, 2.0, rng),
                                 RandomVector(n, 1.0, rng)};
    const HigherOrderState rate =
        HExpDrlField(state, game, Params(eps, gamma), block);
    // Hand expansion: z' = gamma (-z + u - K (xi + x)), xi' = -a (xi + x).
    const Eigen::VectorXd x =
        Softmax(state.z, Temperature(eps), game.layout()).values();
    const Eigen::VectorXd u = BruteForcePayoffVector(game, x);
    const Eigen::VectorXd zdot = gamma * (-state.z + u - k * (state.xi + x));
    const Eigen::VectorXd xidot = -a * (state.xi + x);
    CHECK((rate.z - zdot).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK((rate.xi - xidot).lpNorm<Eigen::Infinity>() < 1e-15);
  }
}

TEST_CASE("a degenerate block reduces to the first-order field") {
  std::mt19937_64 rng(25);
  const GameSpec game = Preset("two_player_rps", {{"l", 5.0}});
  const int n = 6;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  const FeedbackBlock block{-eye, -eye, Eigen::MatrixXd::Zero(n, n),
                            Eigen::MatrixXd::Zero(n, n)};
  const HigherOrderState state{RandomVector(n, 2.0, rng),
                               RandomVector(n, 1.0, rng)};
  const HigherOrderState rate = HExpDrlField(state, game, Params(1), block);
  CHECK((rate.z - ExpDrlField(state.z, game, Params(1))).norm() == 0.0);
}

TEST_CASE("higher-order scheme preserves rest points") {
  std::mt19937_64 rng(26);
  for (double l : {1.0, 5.0, 8.0}) {
    const GameSpec game = Preset("rps", {{"l", l}});
    const Eigen::VectorXd z_star = Eigen::VectorXd::Constant(3, (1 - l) / 3);
    for (int s = 0; s < 5; ++s) {
      const FeedbackBlock block = RandomZeroGainBlock(3, rng);
      const HigherOrderSystem system(game, Params(0.8), block);
      const Eigen::VectorXd x =
          Softmax(z_star, Temperature(0.8), game.layout()).values();
      const HigherOrderState at{z_star, system.FilterRestState(x)};
      CHECK(system.Adjustment(at).lpNorm<Eigen::Infinity>() < 1e-12);
      const HigherOrderState rate = system.Derivative(at);
      CHECK(rate.z.lpNorm<Eigen::Infinity>() < 1e-12);
      CHECK(rate.xi.lpNorm<Eigen::Infinity>() < 1e-12);
    }
  }
}

TEST_CASE("higher-order system rejects invalid blocks") {
  const GameSpec game = Preset("rps", {{"l", 1.0}});
  FeedbackBlock unstable = FeedbackBlock::HighPass(game.layout(), 1, 1);
  unstable.a = Eigen::MatrixXd::Identity(3, 3);
  unstable.d = -unstable.d;  // keeps the DC gain at zero
  CHECK_THROWS_AS(HigherOrderSystem(game, Params(1), unstable),
                  ConfigurationError);
  FeedbackBlock gain = FeedbackBlock::HighPass(game.layout(), 1, 1);
  gain.d.setZero();
  CHECK_THROWS_AS(HigherOrderSystem(game, Params(1), gain), ConfigurationError);
  CHECK_THROWS_AS(
      HigherOrderSystem(game, Params(1),
                        FeedbackBlock::HighPass(ActionLayout({2, 2}), 1, 1)),
      ConfigurationError);
}

TEST_CASE("induced strategy field: chain rule and entropy form") {
  std::mt19937_64 rng(27);
  for (const GameSpec& game : AllPresets()) {
    const int n = game.total_actions();
    for (int s = 0; s < 100; ++s) {
      const double eps = 0.2 + 0.1 * (s % 10);
      const FirstOrderParams p = Params(eps, 1.0 + 0.5 * (s % 3));
      const Eigen::VectorXd z = RandomVector(n, 2.0, rng);
      const Eigen::VectorXd xdot = InducedStrategyField(z, game, p);
      const Eigen::VectorXd chain =
          SoftmaxJacobian(z, p.eps, game.layout()) * ExpDrlField(z, game, p);
      CHECK((xdot - chain).lpNorm<Eigen::Infinity>() < 1e-10);
      CHECK((InducedStrategyFieldEntropyForm(z, game, p) - xdot)
                .lpNorm<Eigen::Infinity>() < 1e-10);
      for (int q = 0; q < game.layout().players(); ++q) {
        CHECK(std::abs(xdot.segment(game.layout().offset(q),
                                    game.layout().count(q))
                           .sum()) < 1e-12);
      }
    }
  }
  const GameSpec rps = Preset("rps", {{"l", 5.0}});
  CHECK(InducedStrategyField(Eigen::VectorXd::Constant(3, -4.0 / 3), rps,
                             Params(1))
            .lpNorm<Eigen::Infinity>() < 1e-15);
}

TEST_CASE("entropy form: explicit evaluation") {
  // Replicator term minus the relative-entropy drift, written out directly.
  std::mt19937_64 rng(28);
  const GameSpec game = Preset("modified_rps_Abar");
  const double eps = 0.4, gamma = 2.0;
  const Eigen::VectorXd z = RandomVector(3, 2.0, rng);
  const Eigen::VectorXd x = Softmax(z, Temperature(eps), game.layout()).values();
  const Eigen::VectorXd u = BruteForcePayoffVector(game, x);
  Eigen::VectorXd expected(3);
  for (int i = 0; i < 3; ++i) {
    double entropy = 0.0;
    for (int j = 0; j < 3; ++j) entropy += x[j] * std::log(x[i] / x[j]);
    expected[i] =
        gamma / eps * x[i] * (u[i] - x.dot(u)) - gamma * x[i] * entropy;
  }
  CHECK((InducedStrategyFieldEntropyForm(z, game, Params(eps, gamma)) -
         expected)
            .lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("revision protocol reproduces the induced field") {
  std::mt19937_64 rng(29);
  for (const GameSpec& game : AllPresets()) {
    const int n = game.total_actions();
    for (int s = 0; s < 100; ++s) {
      const FirstOrderParams p = Params(0.3 + 0.1 * (s % 7), 1.2);
      const Eigen::VectorXd z = RandomVector(n, 2.0, rng);
      const MixedProfile x = Softmax(z, p.eps, game.layout());
      CHECK((RevisionProtocolField(x, z, game, p) -
             InducedStrategyField(z, game, p))
                .lpNorm<Eigen::Infinity>() < 1e-10);
    }
  }
  // Uniform x, equal payoffs and scores: inflow balances outflow.
  const GameSpec game = Preset("rps", {{"l", 1.0}});
  const MixedProfile centroid = MixedProfile::Centroid(game.layout());
  CHECK(RevisionProtocolField(centroid, Eigen::VectorXd::Constant(3, 0.7), game,
                              Params(1))
            .lpNorm<Eigen::Infinity>() < 1e-15);
}

TEST_CASE("switch rates depend only on the target strategy") {
  const Eigen::Vector3d x(0.2, 0.3, 0.5), u(1, 2, 3), v(0, 0.5, 0), z(0.5, 0, 1);
  const Eigen::MatrixXd rho = SwitchRates(x, u, v, z, Params(0.5, 2.0));
  for (int j = 0; j < 3; ++j) {
    const double expected = 2.0 / 0.5 * x[j] * (u[j] - v[j] - z[j]);
    for (int i = 0; i < 3; ++i) CHECK(rho(i, j) == doctest::Approx(expected));
  }
}

TEST_CASE("higher-order revision protocol matches the strategy field") {
  std::mt19937_64 rng(30);
  for (const GameSpec& game : AllPresets()) {
    const int n = game.total_actions();
    const FirstOrderParams p = Params(0.5, 1.0);
    const HigherOrderSystem system(
        game, p, FeedbackBlock::HighPass(game.layout(), 1.0, 1.0));
    for (int s = 0; s < 20; ++s) {
      const HigherOrderState state{RandomVector(n, 2.0, rng),
                                   RandomVector(n, 1.0, rng)};
      const MixedProfile x = Softmax(state.z, p.eps, game.layout());
      // Chain rule on the higher-order score dynamics.
      const Eigen::VectorXd chain =
          SoftmaxJacobian(state.z, p.eps, game.layout()) *
          system.Derivative(state).z;
      CHECK((HigherOrderRevisionProtocolField(x, state, system) - chain)
                .lpNorm<Eigen::Infinity>() < 1e-10);
    }
  }
}

TEST_CASE("Euler discrete step") {
  std::mt19937_64 rng(31);
  const GameSpec game = Preset("matching_pennies");
  const Eigen::VectorXd z = RandomVector(4, 1.0, rng);
  const DiscreteState full = EulerDiscreteStep(z, game, Params(0.5, 2.0), 0.5);
  const Eigen::VectorXd x = Softmax(z, Temperature(0.5), game.layout()).values();
  CHECK((full.z - BruteForcePayoffVector(game, x)).norm() < 1e-15);
  CHECK((full.x.values() -
         Softmax(full.z, Temperature(0.5), game.layout()).values())
            .norm() == 0.0);
  const DiscreteState rest =
      EulerDiscreteStep(Eigen::VectorXd::Zero(4), game, Params(1), 0.3);
  CHECK(rest.z.norm() == 0.0);
}

TEST_CASE("small-step Euler recursion tracks the ODE") {
  std::mt19937_64 rng(32);
  const GameSpec game = Preset("matching_pennies");
  const FirstOrderParams p = Params(1.0);
  const Eigen::VectorXd z0 = RandomVector(4, 1.0, rng);
  const FirstOrderSystem system(game, p);
  const Trajectory ode =
      Integrate([&](const Eigen::VectorXd& z) { return system(z); }, z0,
                {1e-4, 10.0, 100000});
  const auto euler_error = [&](double alpha) {
    Eigen::VectorXd z = z0;
    const long steps = std::lround(10.0 / alpha);
    for (long k = 0; k < steps; ++k) z = EulerDiscreteStep(z, game, p, alpha).z;
    return (z - ode.states.back()).lpNorm<Eigen::Infinity>();
  };
  const double coarse = euler_error(2e-3);
  const double fine = euler_error(1e-3);
  CHECK(fine < 5e-3);
  CHECK(coarse / fine > 1.6);
  CHECK(coarse / fine < 2.4);
}

}  // namespace
}  // namespace gamedyn
