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

#include "gamedyn/example_table.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "gamedyn/classify.h"
#include "gamedyn/convergence.h"
#include "gamedyn/equilibrium.h"
#include "gamedyn/errors.h"
#include "gamedyn/experiment.h"
#include "gamedyn/presets.h"

namespace gamedyn {
namespace {

constexpr int kStatusSeeds = 5;
constexpr int kSpeedSeeds = 10;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string Vec(const Eigen::VectorXd& v) {
  std::string s = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += Num(v[i]);
  }
  return s + ")";
}

std::string List(const std::vector<double>& v) {
  return Vec(Eigen::Map<const Eigen::VectorXd>(v.data(), v.size()));
}

bool SameSorted(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

ExampleCheck ClassCheck(GameSpec game, MonotonicityClass cls, double mu,
                        std::string provenance) {
  ExampleCheck c;
  c.name = "classification";
  c.expected = ClassName(cls) + ", mu = " + Num(mu);
  c.tolerance = "1e-3 on mu";
  c.provenance = std::move(provenance);
  c.run = [game, cls, mu]() {
    const ClassificationReport r = Classify(game);
    return CheckResult{r.monotonicity == cls && std::abs(r.mu - mu) <= 1e-3,
                       ClassName(r.monotonicity) + ", mu = " + Num(r.mu)};
  };
  return c;
}

ExampleCheck TangentSpectrumCheck(GameSpec game, std::vector<double> expected,
                                  double tol, std::string provenance) {
  ExampleCheck c;
  c.name = "tangent eigenvalues of Phi + Phi^T";
  c.expected = List(expected);
  c.tolerance = Num(tol);
  c.provenance = std::move(provenance);
  c.run = [game, expected, tol]() {
    const ClassificationReport r = Classify(game);
    return CheckResult{SameSorted(r.tangent_eigenvalues, expected, tol),
                       List(r.tangent_eigenvalues)};
  };
  return c;
}

ExampleCheck FullSpectrumCheck(GameSpec game, std::vector<double> expected,
                               double tol, std::string provenance) {
  ExampleCheck c;
  c.name = "eigenvalues of Phi + Phi^T";
  c.expected = List(expected);
  c.tolerance = Num(tol);
  c.provenance = std::move(provenance);
  c.run = [game, expected, tol]() {
    const ClassificationReport r = Classify(game);
    return CheckResult{SameSorted(r.full_eigenvalues, expected, tol),
                       List(r.full_eigenvalues)};
  };
  return c;
}

ExampleCheck RestStrategyCheck(GameSpec game, double eps,
                               Eigen::VectorXd expected, double tol,
                               std::string provenance) {
  ExampleCheck c;
  c.name = "rest point x at eps = " + Num(eps);
  c.expected = Vec(expected);
  c.tolerance = Num(tol) + " (max norm)";
  c.provenance = std::move(provenance);
  c.run = [game, eps, expected, tol]() {
    const auto r = AnyRestPoint(game, Temperature(eps),
                                Eigen::VectorXd::Zero(game.total_actions()));
    if (!r) return CheckResult{false, "rest point not found"};
    const double err = (r->x - expected).lpNorm<Eigen::Infinity>();
    return CheckResult{err <= tol, Vec(r->x)};
  };
  return c;
}

ExampleCheck RestScoreCheck(GameSpec game, double eps,
                            Eigen::VectorXd expected, double tol,
                            std::string provenance) {
  ExampleCheck c;
  c.name = "rest point z at eps = " + Num(eps);
  c.expected = Vec(expected);
  c.tolerance = Num(tol) + " (max norm)";
  c.provenance = std::move(provenance);
  c.run = [game, eps, expected, tol]() {
    const auto r = AnyRestPoint(game, Temperature(eps),
                                Eigen::VectorXd::Zero(game.total_actions()));
    if (!r) return CheckResult{false, "rest point not found"};
    const double err = (r->z - expected).lpNorm<Eigen::Infinity>();
    return CheckResult{err <= tol, Vec(r->z)};
  };
  return c;
}

SchemeConfig Config(Scheme scheme, double eps, double gamma = 1.0) {
  SchemeConfig config;
  config.scheme = scheme;
  config.params.eps = Temperature(eps);
  config.params.gamma = gamma;
  config.integration.record_every = 10;
  return config;
}

// Convergence status of one seeded run; "diverged" on blow-up.
std::string RunStatus(const GameSpec& game, const SchemeConfig& config,
                      const std::optional<Eigen::VectorXd>& x_star,
                      std::uint64_t seed, ConvergenceReport* report) {
  try {
    const Trajectory traj =
        Simulate(game, config, SeededScores(game.total_actions(), seed));
    *report = AnalyzeConvergence(traj, x_star);
    return StatusName(report->status);
  } catch (const IntegrationDiverged&) {
    return "diverged";
  }
}

std::string Tally(const std::map<std::string, int>& counts) {
  std::string s;
  for (const auto& [name, n] : counts) {
    if (!s.empty()) s += ", ";
    s += name + " x" + std::to_string(n);
  }
  return s;
}

ExampleCheck StatusCheck(GameSpec game, Scheme scheme, double eps,
                         ConvergenceStatus expected, std::string provenance,
                         double gamma = 1.0, bool informational = false) {
  ExampleCheck c;
  c.name = SchemeName(scheme) + " at eps = " + Num(eps) +
           (gamma != 1.0 ? ", gamma = " + Num(gamma) : "");
  c.expected = StatusName(expected) + " for " + std::to_string(kStatusSeeds) +
               " seeds";
  c.tolerance = informational ? "observed only" : "unanimous";
  c.provenance = std::move(provenance);
  c.informational = informational;
  c.run = [game, scheme, eps, expected, gamma]() {
    const SchemeConfig config = Config(scheme, eps, gamma);
    std::optional<Eigen::VectorXd> x_star;
    if (auto r = UniqueRestPoint(game, Temperature(eps))) x_star = r->x;
    std::map<std::string, int> counts;
    for (int seed = 0; seed < kStatusSeeds; ++seed) {
      ConvergenceReport report;
      ++counts[RunStatus(game, config, x_star, seed, &report)];
    }
    const bool ok = counts.size() == 1 &&
                    counts.begin()->first == StatusName(expected);
    return CheckResult{ok, Tally(counts)};
  };
  return c;
}

// Per-action range of player 1's strategy over the convergence window.
ExampleCheck OrbitRecord(GameSpec game, double eps, std::string provenance) {
  ExampleCheck c;
  c.name = "first-order orbit of player 1 at eps = " + Num(eps);
  c.expected = "cycle through the three pure-strategy neighbourhoods";
  c.tolerance = "observed only";
  c.provenance = std::move(provenance);
  c.informational = true;
  c.run = [game, eps]() {
    const Trajectory traj = Simulate(game, Config(Scheme::kFirstOrder, eps),
                                     SeededScores(game.total_actions(), 0));
    const ConvergenceReport report = AnalyzeConvergence(traj, std::nullopt);
    const int n1 = game.layout().count(0);
    Eigen::VectorXd lo = Eigen::VectorXd::Constant(n1, 1.0);
    Eigen::VectorXd hi = Eigen::VectorXd::Zero(n1);
    for (int k = 0; k < traj.size(); ++k) {
      if (traj.times[k] < report.window_start) continue;
      lo = lo.cwiseMin(traj.strategies[k].head(n1));
      hi = hi.cwiseMax(traj.strategies[k].head(n1));
    }
    return CheckResult{true, StatusName(report.status) + ", min " + Vec(lo) +
                                 ", max " + Vec(hi)};
  };
  return c;
}

ExampleCheck BifurcationCheck(GameSpec game, Scheme scheme, double expected,
                              double tol, std::string provenance) {
  ExampleCheck c;
  c.name = SchemeName(scheme) + " bifurcation eps*";
  c.expected = Num(expected);
  c.tolerance = Num(tol);
  c.provenance = std::move(provenance);
  c.run = [game, scheme, expected, tol]() {
    std::optional<FeedbackBlock> block;
    if (scheme == Scheme::kHigherOrder) {
      block = FeedbackBlock::HighPass(game.layout(), 1.0, 1.0);
    }
    BifurcationOptions opts;
    opts.tolerance = 1e-6;
    const BifurcationResult r =
        BifurcationEpsilon(game, FirstOrderParams{}, block, opts);
    if (r.status != "found") return CheckResult{false, r.status};
    return CheckResult{std::abs(r.eps_star - expected) <= tol,
                       Num(r.eps_star)};
  };
  return c;
}

// First-order Jacobian of single-population RPS at its rest point:
// {-1, (l - 1 - 6 eps)/(6 eps) +- i sqrt(3) (1 + l)/(6 eps)}.
ExampleCheck RpsJacobianCheck(double l, double eps) {
  const double re = (l - 1.0 - 6.0 * eps) / (6.0 * eps);
  const double im = std::sqrt(3.0) * (1.0 + l) / (6.0 * eps);
  ExampleCheck c;
  c.name = "first-order Jacobian spectrum at eps = " + Num(eps);
  c.expected = "{-1, " + Num(re) + " +- " + Num(im) + "i}";
  c.tolerance = "1e-6";
  c.provenance =
      "derived: circulant eigenvalues of the RPS matrix through the soft-max "
      "Jacobian at the centroid";
  c.run = [l, eps, re, im]() {
    const GameSpec game = Preset("rps", {{"l", l}});
    FirstOrderParams params;
    params.eps = Temperature(eps);
    const Eigen::VectorXd z = Eigen::VectorXd::Constant(3, (1.0 - l) / 3.0);
    const Eigen::MatrixXd j = FirstOrderJacobian(z, game, params);
    const Eigen::VectorXcd values =
        Eigen::EigenSolver<Eigen::MatrixXd>(j).eigenvalues();
    std::vector<std::complex<double>> ev(values.begin(), values.end());
    std::vector<std::complex<double>> want = {{-1.0, 0.0}, {re, im}, {re, -im}};
    auto less = [](std::complex<double> a, std::complex<double> b) {
      return std::make_pair(a.real(), a.imag()) <
             std::make_pair(b.real(), b.imag());
    };
    std::sort(ev.begin(), ev.end(), less);
    std::sort(want.begin(), want.end(), less);
    bool ok = ev.size() == want.size();
    std::string observed = "{";
    for (size_t i = 0; i < ev.size(); ++i) {
      if (i > 0) observed += ", ";
      observed += Num(ev[i].real()) + (ev[i].imag() < 0 ? " - " : " + ") +
                  Num(std::abs(ev[i].imag())) + "i";
      if (ok && std::abs(ev[i] - want[i]) > 1e-6) ok = false;
    }
    return CheckResult{ok, observed + "}"};
  };
  return c;
}

// Time to reach ||x - x*||_inf < 1e-3 for two configurations over seeds;
// passes when the faster one wins the majority.
ExampleCheck SpeedCheck(GameSpec game, std::string name, SchemeConfig slow,
                        SchemeConfig fast, std::string expected,
                        std::string provenance) {
  ExampleCheck c;
  c.name = std::move(name);
  c.expected = std::move(expected);
  c.tolerance = "majority of " + std::to_string(kSpeedSeeds) + " seeds";
  c.provenance = std::move(provenance);
  c.run = [game, slow, fast]() {
    const auto star = UniqueRestPoint(game, slow.params.eps);
    if (!star) return CheckResult{false, "no unique rest point"};
    int wins = 0;
    double sum_slow = 0.0, sum_fast = 0.0;
    for (int seed = 0; seed < kSpeedSeeds; ++seed) {
      const Eigen::VectorXd z0 = SeededScores(game.total_actions(), seed);
      const double t_slow = TimeToReach(Simulate(game, slow, z0), star->x, 1e-3);
      const double t_fast = TimeToReach(Simulate(game, fast, z0), star->x, 1e-3);
      if (t_fast < t_slow) ++wins;
      sum_slow += t_slow;
      sum_fast += t_fast;
    }
    return CheckResult{2 * wins > kSpeedSeeds,
                       std::to_string(wins) + "/" +
                           std::to_string(kSpeedSeeds) + " faster, mean " +
                           Num(sum_fast / kSpeedSeeds) + " vs " +
                           Num(sum_slow / kSpeedSeeds)};
  };
  return c;
}

Eigen::VectorXd V3(double a, double b, double c) {
  return Eigen::Vector3d(a, b, c);
}

constexpr ConvergenceStatus kConv = ConvergenceStatus::kConverged;
constexpr ConvergenceStatus kCycle = ConvergenceStatus::kLimitCycle;
constexpr Scheme kFirst = Scheme::kFirstOrder;
constexpr Scheme kHigher = Scheme::kHigherOrder;
constexpr MonotonicityClass kNull = MonotonicityClass::kNullMonotone;
constexpr MonotonicityClass kStrict = MonotonicityClass::kStrictlyMonotone;
constexpr MonotonicityClass kHypo = MonotonicityClass::kHypoMonotone;

const char kOutcomeNote[] = "reported simulation outcome";
const char kValueNote[] = "reported numerical value";
const char kDerivedNote[] = "derived analytically";

ExampleDescriptor Rps(double l) {
  const GameSpec game = Preset("rps", {{"l", l}});
  ExampleDescriptor d;
  char id[16];
  std::snprintf(id, sizeof(id), "1-l%g", l);
  d.id = id;
  d.summary = "single-population RPS, l = " + Num(l);
  d.checks.push_back(TangentSpectrumCheck(
      game, {l - 1.0, l - 1.0}, 1e-9,
      "derived: A + A^T has eigenvalue l - 1 twice on the tangent space"));
  d.checks.push_back(ClassCheck(
      game, l > 1 ? kHypo : (l < 1 ? kStrict : kNull),
      std::max(0.0, (l - 1.0) / 2.0), "derived: mu = (l - 1)/2 for l > 1"));
  d.checks.push_back(RestScoreCheck(
      game, 1.0, Eigen::VectorXd::Constant(3, (1.0 - l) / 3.0), 1e-8,
      "derived: the centroid is the rest point, z = U(centroid)"));
  if (l < 8.0) {
    d.checks.push_back(StatusCheck(game, kFirst, 1.0, kConv, kOutcomeNote));
    d.checks.push_back(StatusCheck(game, kHigher, 1.0, kConv, kOutcomeNote));
  } else {
    d.checks.push_back(StatusCheck(game, kFirst, 1.0, kCycle, kOutcomeNote));
    d.checks.push_back(StatusCheck(game, kHigher, 1.0, kConv, kOutcomeNote));
    d.checks.push_back(BifurcationCheck(
        game, kFirst, 7.0 / 6.0, 1e-3,
        "derived: the complex pair crosses at eps = (l - 1)/6"));
    d.checks.push_back(
        BifurcationCheck(game, kHigher, 0.86, 0.02, kValueNote));
  }
  if (l == 2.5 || l == 8.0) d.checks.push_back(RpsJacobianCheck(l, 1.0));
  if (l == 5.0) d.checks.push_back(RpsJacobianCheck(l, 0.5));
  if (l == 2.5 || l == 5.0) {
    d.checks.push_back(SpeedCheck(
        game, "time to 1e-3, higher-order vs first-order",
        Config(kFirst, 1.0), Config(kHigher, 1.0), "higher-order faster",
        "reported qualitative claim; checked ordinally"));
  }
  return d;
}

std::vector<ExampleDescriptor> BuildTable() {
  std::vector<ExampleDescriptor> t;
  for (double l : {1.0, 2.5, 5.0, 8.0}) t.push_back(Rps(l));

  {
    const GameSpec game = Preset("anticoord123");
    ExampleDescriptor d{"2", "single-population 123 anti-coordination", {}};
    d.checks.push_back(ClassCheck(game, kStrict, 0.0, kDerivedNote));
    d.checks.push_back(RestStrategyCheck(game, 1.0, V3(0.40, 0.32, 0.27),
                                         0.005, kValueNote));
    d.checks.push_back(RestStrategyCheck(
        game, 0.1, V3(6.0 / 11, 3.0 / 11, 2.0 / 11), 0.01,
        "derived: the interior Nash equilibrium, approached as eps -> 0"));
    d.checks.push_back(StatusCheck(game, kFirst, 1.0, kConv, kOutcomeNote));
    d.checks.push_back(StatusCheck(game, kHigher, 1.0, kConv, kOutcomeNote));
    t.push_back(std::move(d));
  }
  {
    const GameSpec game = Preset("matching_pennies");
    ExampleDescriptor d{"3", "two-player matching pennies", {}};
    d.checks.push_back(
        ClassCheck(game, kNull, 0.0, "derived: Phi + Phi^T = 0"));
    d.checks.push_back(RestStrategyCheck(
        game, 1.0, Eigen::VectorXd::Constant(4, 0.5), 1e-8,
        "derived: symmetric equilibrium (1/2, 1/2) for every eps"));
    for (double gamma : {1.0, 4.0}) {
      d.checks.push_back(
          StatusCheck(game, kFirst, 1.0, kConv, kOutcomeNote, gamma));
      d.checks.push_back(
          StatusCheck(game, kHigher, 1.0, kConv, kOutcomeNote, gamma));
    }
    d.checks.push_back(SpeedCheck(
        game, "first-order time to 1e-3, gamma = 4 vs gamma = 1",
        Config(kFirst, 1.0, 1.0), Config(kFirst, 1.0, 4.0), "gamma = 4 faster",
        "reported qualitative claim; checked ordinally"));
    t.push_back(std::move(d));
  }
  for (double l : {1.0, 5.0}) {
    const GameSpec game = Preset("two_player_rps", {{"l", l}});
    ExampleDescriptor d{l == 1.0 ? "4-l1" : "4-l5",
                        "two-player RPS, l = " + Num(l), {}};
    const double s = l - 1.0;
    d.checks.push_back(FullSpectrumCheck(
        game, {2 * s, -2 * s, s, -s, s, -s}, 1e-9,
        "derived: Phi + Phi^T spectrum is +- that of A + A^T"));
    d.checks.push_back(ClassCheck(game, l == 1.0 ? kNull : kHypo,
                                  std::abs(s) / 2.0,
                                  "derived: mu = |l - 1|/2"));
    d.checks.push_back(StatusCheck(game, kFirst, 1.0, kConv, kOutcomeNote));
    d.checks.push_back(StatusCheck(game, kHigher, 1.0, kConv, kOutcomeNote));
    if (l == 5.0) {
      d.checks.push_back(BifurcationCheck(
          game, kFirst, 2.0 / 3.0, 1e-3,
          "derived: the linearization at the centroid loses stability at "
          "eps = (l - 1)/6"));
      d.checks.push_back(
          BifurcationCheck(game, kHigher, 0.347, 5e-3, kValueNote));
    }
    t.push_back(std::move(d));
  }
  {
    const GameSpec game = Preset("two_player_rps", {{"l", 5.0}});
    ExampleDescriptor d{"4-l5-eps0.5", "two-player RPS, l = 5, eps = 0.5", {}};
    d.checks.push_back(StatusCheck(game, kFirst, 0.5, kCycle, kOutcomeNote));
    d.checks.push_back(StatusCheck(game, kHigher, 0.5, kConv, kOutcomeNote));
    t.push_back(std::move(d));
  }
  {
    const GameSpec game = Preset("shapley");
    ExampleDescriptor d{"5", "two-player Shapley game", {}};
    d.checks.push_back(ClassCheck(game, kHypo, 0.5,
                                  "derived: the RPS construction with l = 0"));
    d.checks.push_back(StatusCheck(game, kFirst, 1.0, kConv, kOutcomeNote));
    d.checks.push_back(StatusCheck(game, kHigher, 1.0, kConv, kOutcomeNote));
    d.checks.push_back(StatusCheck(game, kFirst, 0.1, kCycle, kOutcomeNote));
    d.checks.push_back(OrbitRecord(game, 0.1, kOutcomeNote));
    t.push_back(std::move(d));
  }
  {
    const GameSpec game = Preset("network_zero_sum_mp");
    ExampleDescriptor d{"6", "three-player network zero-sum matching pennies",
                        {}};
    d.checks.push_back(ClassCheck(
        game, kNull, 0.0, "derived: every edge is zero-sum, Phi + Phi^T = 0"));
    d.checks.push_back(StatusCheck(game, kFirst, 1.0, kConv, kOutcomeNote));
    d.checks.push_back(StatusCheck(game, kHigher, 1.0, kConv, kOutcomeNote));
    t.push_back(std::move(d));
  }
  {
    const GameSpec game = Preset("jordan_mp");
    ExampleDescriptor d{"7", "three-player Jordan matching pennies", {}};
    d.checks.push_back(FullSpectrumCheck(game, {-4, 2, 2, 0, 0, 0}, 1e-9,
                                         kDerivedNote));
    d.checks.push_back(ClassCheck(game, kHypo, 1.0, kDerivedNote));
    // eps = 1 sits on the guarantee boundary, so only the outcome is logged.
    d.checks.push_back(
        StatusCheck(game, kFirst, 1.0, kConv, kOutcomeNote, 1.0, true));
    d.checks.push_back(
        StatusCheck(game, kHigher, 1.0, kConv, kOutcomeNote, 1.0, true));
    t.push_back(std::move(d));
  }
  struct ModifiedCase {
    const char* id;
    const char* preset;
    double eps;
    Eigen::VectorXd x;
    bool cycles;
  };
  const ModifiedCase cases[] = {
      {"8-A-eps1", "modified_rps_A", 1.0, V3(0.379, 0.2997, 0.3213), false},
      {"8-Abar-eps1", "modified_rps_Abar", 1.0, V3(0.2741, 0.3647, 0.3612),
       false},
      {"8-A-eps0.2", "modified_rps_A", 0.2, V3(0.4025, 0.3024, 0.2951), false},
      {"8-Abar-eps0.2", "modified_rps_Abar", 0.2, V3(0.2653, 0.3237, 0.4109),
       true},
  };
  for (const ModifiedCase& mc : cases) {
    const GameSpec game = Preset(mc.preset);
    const bool bar = std::string(mc.preset) == "modified_rps_Abar";
    ExampleDescriptor d{mc.id,
                        std::string(bar ? "monocyclic" : "monotone") +
                            " modified RPS, eps = " + Num(mc.eps),
                        {}};
    d.checks.push_back(TangentSpectrumCheck(
        game, {bar ? 1.0 : -1.0}, 1e-3,
        "reported: the +-1 eigenvector of A + A^T lies in the tangent space"));
    d.checks.push_back(FullSpectrumCheck(
        game,
        bar ? std::vector<double>{-3.3723, 2.3723, 1.0}
            : std::vector<double>{3.3723, -2.3723, -1.0},
        1e-3, kValueNote));
    d.checks.push_back(ClassCheck(game, bar ? kHypo : kStrict,
                                  bar ? 0.5 : 0.0, kValueNote));
    d.checks.push_back(RestStrategyCheck(game, mc.eps, mc.x, 1e-3, kValueNote));
    d.checks.push_back(StatusCheck(game, kFirst, mc.eps,
                                   mc.cycles ? kCycle : kConv, kOutcomeNote));
    d.checks.push_back(StatusCheck(game, kHigher, mc.eps, kConv, kOutcomeNote));
    t.push_back(std::move(d));
  }
  {
    const GameSpec game = Preset("modified_jordan");
    ExampleDescriptor d{"9", "asymmetric three-player Jordan game, eps = 0.1",
                        {}};
    d.checks.push_back(StatusCheck(game, kFirst, 0.1, kCycle, kOutcomeNote));
    d.checks.push_back(StatusCheck(game, kHigher, 0.1, kConv, kOutcomeNote));
    t.push_back(std::move(d));
  }
  return t;
}

}  // namespace

const std::vector<ExampleDescriptor>& ExampleTable() {
  static const auto* table = new std::vector<ExampleDescriptor>(BuildTable());
  return *table;
}

const ExampleDescriptor* FindExample(std::string_view id) {
  for (const ExampleDescriptor& d : ExampleTable()) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

}  // namespace gamedyn
