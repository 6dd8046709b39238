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

#include "gamedyn/cli.h"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "gamedyn/classify.h"
#include "gamedyn/convergence.h"
#include "gamedyn/equilibrium.h"
#include "gamedyn/errors.h"
#include "gamedyn/example_table.h"
#include "gamedyn/experiment.h"
#include "gamedyn/game_io.h"
#include "gamedyn/lyapunov.h"
#include "gamedyn/presets.h"
#include "gamedyn/report_json.h"
#include "gamedyn/stochastic.h"
#include "gamedyn/trajectory_io.h"

namespace gamedyn {
namespace {

using json = nlohmann::json;

struct Options {
  std::string preset;
  std::vector<std::string> params;
  std::string game_file;

  std::string scheme = "first-order";
  double eps = 1.0;
  double gamma = 1.0;
  double gain = 1.0;
  double pole = 1.0;
  double dt = 0.01;
  double t_end = 500.0;
  int record_every = 1;
  std::vector<std::uint64_t> seeds = {0};
  std::string out_dir = "gamedyn_out";
  bool ternary = false;

  // Discrete and stochastic schemes. NaN alpha picks the scheme default.
  double alpha = std::numeric_limits<double>::quiet_NaN();
  long steps = 10000;
  std::string estimator = "full-info";
  std::string schedule;

  double eps_min = 0.05;
  double eps_max = 5.0;
  double tol = 1e-4;

  std::string example_id;
  std::string export_path;
};

GameSpec LoadGame(const Options& o) {
  if (o.preset.empty() == o.game_file.empty()) {
    throw UsageError("exactly one of --preset and --game is required");
  }
  if (!o.game_file.empty()) {
    if (!o.params.empty()) throw UsageError("--param needs --preset");
    try {
      return ReadGameFile(o.game_file);
    } catch (const json::exception& e) {
      throw UsageError("cannot read game file '" + o.game_file +
                       "': " + e.what());
    }
  }
  PresetParams params;
  for (const std::string& kv : o.params) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects key=value, got '" + kv + "'");
    }
    const std::string value = kv.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0') {
      throw UsageError("--param value is not a number: '" + kv + "'");
    }
    params[kv.substr(0, eq)] = v;
  }
  return Preset(o.preset, params);
}

std::filesystem::path OutputDir(const Options& o) {
  const char* env = std::getenv("GAMEDYN_OUT");
  std::filesystem::path dir = (env != nullptr && *env != '\0') ? env : o.out_dir;
  std::filesystem::create_directories(dir);
  return dir;
}

void WriteJson(const std::filesystem::path& path, const json& doc) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path.string());
  f << doc.dump(2) << "\n";
}

FirstOrderParams Params(const Options& o) {
  FirstOrderParams p;
  p.eps = Temperature(o.eps);
  p.gamma = o.gamma;
  p.Validate();
  return p;
}

json SpectrumJson(const SpectrumReport& s) {
  json ev = json::array();
  for (size_t i = 0; i < s.eigenvalues.size(); ++i) {
    ev.push_back({{"re", s.eigenvalues[i].real()},
                  {"im", s.eigenvalues[i].imag()},
                  {"tangent", static_cast<bool>(s.tangent[i])}});
  }
  return {{"eigenvalues", ev},
          {"abscissa", s.abscissa},
          {"stable", s.abscissa < 0.0}};
}

int Classify(const Options& o, std::ostream& out) {
  const GameSpec game = LoadGame(o);
  json doc = ToJson(Classify(game));
  doc["game"] = game.name();
  WriteJson(OutputDir(o) / "classification.json", doc);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int Solve(const Options& o, std::ostream& out) {
  const GameSpec game = LoadGame(o);
  const FirstOrderParams params = Params(o);
  const HigherOrderSystem higher(
      game, params, FeedbackBlock::HighPass(game.layout(), o.gain, o.pole));
  json points = json::array();
  for (const RestPointResult& r : MultiStartRestPoints(game, params.eps)) {
    json p = ToJson(r);
    p["first_order"] = SpectrumJson(
        AnalyzeSpectrum(FirstOrderJacobian(r.z, game, params), game.layout()));
    p["higher_order"] = SpectrumJson(AnalyzeSpectrum(
        HigherOrderJacobian(HigherOrderRestState(r.z, higher), higher),
        game.layout()));
    points.push_back(std::move(p));
  }
  json doc = {{"game", game.name()},
              {"eps", o.eps},
              {"gamma", o.gamma},
              {"K", o.gain},
              {"a", o.pole},
              {"rest_points", points}};
  WriteJson(OutputDir(o) / "rest_points.json", doc);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

struct SeedRun {
  std::uint64_t seed = 0;
  json summary;
};

Trajectory DiscreteRun(const GameSpec& game, const FirstOrderParams& params,
                       double alpha, long steps, int record_every,
                       const Eigen::VectorXd& z0) {
  Trajectory traj;
  Eigen::VectorXd z = z0;
  auto record = [&](long k) {
    traj.times.push_back(static_cast<double>(k));
    traj.states.push_back(z);
    traj.strategies.push_back(Softmax(z, params.eps, game.layout()).values());
  };
  record(0);
  for (long k = 1; k <= steps; ++k) {
    z = EulerDiscreteStep(z, game, params, alpha).z;
    if (!z.allFinite()) {
      throw IntegrationDiverged("discrete recursion diverged",
                                traj.times.back());
    }
    if (k % record_every == 0 || k == steps) record(k);
  }
  return traj;
}

SeedRun SimulateSeed(const GameSpec& game, const Options& o,
                     const std::optional<RestPointResult>& star,
                     const std::filesystem::path& dir, std::uint64_t seed) {
  const FirstOrderParams params = Params(o);
  const Eigen::VectorXd z0 = SeededScores(game.total_actions(), seed);
  const std::string stem = o.scheme + "_seed" + std::to_string(seed);
  SeedRun run;
  run.seed = seed;
  run.summary = {{"seed", seed}};
  std::optional<Eigen::VectorXd> x_star;
  if (star) x_star = star->x;

  if (o.scheme == "stochastic") {
    StochasticRunOptions so;
    so.steps = o.steps;
    so.alpha = std::isnan(o.alpha) ? 1.0 : o.alpha;
    so.schedule = o.schedule == "constant" ? StepSchedule::kConstant
                                           : StepSchedule::kHarmonic;
    so.mode = o.estimator == "bandit" ? EstimatorMode::kBandit
                                      : EstimatorMode::kFullInformation;
    so.seed = seed;
    so.record_every = o.record_every;
    const std::vector<StochasticRecord> records =
        RunStochastic(z0, game, params, so);
    std::ofstream f(dir / (stem + ".csv"));
    WriteStochasticCsv(f, records, game.layout());
    Trajectory traj;
    for (const StochasticRecord& r : records) {
      traj.times.push_back(static_cast<double>(r.k));
      traj.states.push_back(r.z);
      traj.strategies.push_back(r.x);
    }
    const ConvergenceReport report = AnalyzeConvergence(traj, x_star);
    run.summary["status"] = StatusName(report.status);
    run.summary["csv"] = stem + ".csv";
    run.summary["terminal_x"] = VectorToJson(traj.strategies.back());
    run.summary["terminal_V"] =
        star ? json(BregmanLse(traj.states.back(), star->z, params.eps,
                               game.layout()))
             : json(nullptr);
    run.summary["convergence"] = ToJson(report);
    return run;
  }

  Trajectory traj;
  try {
    if (o.scheme == "discrete") {
      traj = DiscreteRun(game, params, std::isnan(o.alpha) ? 0.1 : o.alpha,
                         o.steps, o.record_every, z0);
    } else {
      SchemeConfig config;
      config.scheme = ParseScheme(o.scheme);
      config.params = params;
      config.gain = o.gain;
      config.pole = o.pole;
      config.integration.dt = o.dt;
      config.integration.t_end = o.t_end;
      config.integration.record_every = o.record_every;
      traj = Simulate(game, config, z0);
    }
  } catch (const IntegrationDiverged& e) {
    run.summary["status"] = "diverged";
    run.summary["last_good_time"] = e.last_good_time();
    run.summary["csv"] = nullptr;
    run.summary["terminal_x"] = nullptr;
    run.summary["terminal_V"] = nullptr;
    return run;
  }

  CsvOptions csv;
  csv.ternary = o.ternary;
  csv.filter_state = o.scheme == "higher-order";
  if (star) {
    if (o.scheme == "higher-order") {
      const FeedbackBlock block =
          FeedbackBlock::HighPass(game.layout(), o.gain, o.pole);
      const HigherOrderSystem system(game, params, block);
      const Eigen::VectorXd rest = HigherOrderRestState(star->z, system);
      traj.lyapunov =
          CompositeLyapunovTrace(traj, star->z,
                                 rest.tail(game.total_actions()), params.eps,
                                 params.gamma, game.layout(),
                                 PassivityStorageMatrix(block).p)
              .values;
    } else {
      traj.lyapunov =
          LyapunovTrace(traj, star->z, params.eps, game.layout()).values;
    }
  }
  WriteTrajectoryCsvFile((dir / (stem + ".csv")).string(), traj,
                         game.layout(), csv);
  const ConvergenceReport report = AnalyzeConvergence(traj, x_star);
  run.summary["status"] = StatusName(report.status);
  run.summary["csv"] = stem + ".csv";
  run.summary["terminal_x"] = VectorToJson(traj.strategies.back());
  run.summary["terminal_V"] =
      traj.lyapunov.empty() ? json(nullptr) : json(traj.lyapunov.back());
  run.summary["convergence"] = ToJson(report);
  return run;
}

int Simulate(const Options& o, std::ostream& out) {
  const GameSpec game = LoadGame(o);
  const FirstOrderParams params = Params(o);
  if (o.scheme != "first-order" && o.scheme != "higher-order" &&
      o.scheme != "discrete" && o.scheme != "stochastic") {
    throw UsageError("unknown scheme '" + o.scheme + "'");
  }
  if (o.seeds.empty()) throw UsageError("--seeds needs at least one seed");
  if (o.record_every < 1) throw UsageError("--record-every must be >= 1");
  if (o.steps < 1) throw UsageError("--steps must be >= 1");
  if (o.scheme == "discrete" && !std::isnan(o.alpha) &&
      !(o.alpha > 0.0 && o.alpha <= 1.0)) {
    throw UsageError("--alpha must lie in (0, 1]");
  }
  if (o.scheme == "higher-order") {
    // Surfaces a bad filter as a usage error before any work starts.
    HigherOrderSystem(game, params,
                      FeedbackBlock::HighPass(game.layout(), o.gain, o.pole));
  }
  const std::filesystem::path dir = OutputDir(o);
  const std::optional<RestPointResult> star =
      UniqueRestPoint(game, params.eps);

  std::vector<std::future<SeedRun>> tasks;
  for (std::uint64_t seed : o.seeds) {
    tasks.push_back(std::async(std::launch::async, SimulateSeed,
                               std::cref(game), std::cref(o), std::cref(star),
                               std::cref(dir), seed));
  }
  json runs = json::array();
  for (auto& task : tasks) runs.push_back(task.get().summary);

  json config = {{"scheme", o.scheme}, {"eps", o.eps},
                 {"gamma", o.gamma},   {"record_every", o.record_every}};
  if (o.scheme == "first-order" || o.scheme == "higher-order") {
    config["dt"] = o.dt;
    config["t_end"] = o.t_end;
  } else {
    config["steps"] = o.steps;
    config["alpha"] = std::isnan(o.alpha)
                          ? (o.scheme == "discrete" ? 0.1 : 1.0)
                          : o.alpha;
  }
  if (o.scheme == "higher-order") {
    config["K"] = o.gain;
    config["a"] = o.pole;
  }
  if (o.scheme == "stochastic") {
    config["estimator"] = o.estimator;
    config["schedule"] = o.schedule.empty() ? "harmonic" : o.schedule;
  }
  json doc = {{"game", game.name()},
              {"config", config},
              {"rest_point", star ? ToJson(*star) : json(nullptr)},
              {"runs", runs}};
  WriteJson(dir / "summary.json", doc);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int Bifurcation(const Options& o, std::ostream& out) {
  const GameSpec game = LoadGame(o);
  const Scheme scheme = ParseScheme(o.scheme);
  FirstOrderParams params;
  params.gamma = o.gamma;
  params.Validate();
  std::optional<FeedbackBlock> block;
  if (scheme == Scheme::kHigherOrder) {
    block = FeedbackBlock::HighPass(game.layout(), o.gain, o.pole);
  }
  BifurcationOptions opts;
  opts.eps_min = o.eps_min;
  opts.eps_max = o.eps_max;
  opts.tolerance = o.tol;
  json doc = ToJson(BifurcationEpsilon(game, params, block, opts));
  doc["game"] = game.name();
  doc["scheme"] = SchemeName(scheme);
  WriteJson(OutputDir(o) / "bifurcation.json", doc);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int RunExample(const ExampleDescriptor& d, std::ostream& out) {
  out << "example " << d.id << ": " << d.summary << "\n";
  bool all = true;
  for (const ExampleCheck& c : d.checks) {
    const CheckResult r = c.run();
    const char* tag = c.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
    if (!c.informational && !r.passed) all = false;
    out << "  [" << tag << "] " << c.name << "\n"
        << "      expected:  " << c.expected << "\n"
        << "      observed:  " << r.observed << "\n"
        << "      tolerance: " << c.tolerance << "\n"
        << "      source:    " << c.provenance << "\n";
  }
  out << (all ? "all checks passed" : "some checks failed") << "\n";
  return all;
}

int Reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.example_id == "all") {
    bool all = true;
    for (const ExampleDescriptor& d : ExampleTable()) {
      all = RunExample(d, out) && all;
    }
    return all ? kExitOk : kExitCheckFailed;
  }
  const ExampleDescriptor* d = FindExample(o.example_id);
  if (d == nullptr) {
    err << "unknown example id '" << o.example_id << "'; valid ids:";
    for (const ExampleDescriptor& e : ExampleTable()) err << " " << e.id;
    err << " all\n";
    return kExitUsage;
  }
  return RunExample(*d, out) ? kExitOk : kExitCheckFailed;
}

int ListGames(std::ostream& out) {
  out << "presets:\n";
  for (const PresetInfo& p : PresetCatalog()) {
    out << "  " << p.name;
    for (const std::string& r : p.required_params) out << " " << r << "=<value>";
    for (const auto& [name, value] : p.optional_params) {
      out << " [" << name << "=" << value << "]";
    }
    out << "\n      " << p.description << "\n";
  }
  out << "examples:";
  for (const ExampleDescriptor& d : ExampleTable()) out << " " << d.id;
  out << "\n";
  return kExitOk;
}

int ExportGame(const Options& o, std::ostream& out) {
  const GameSpec game = LoadGame(o);
  if (o.export_path.empty()) {
    out << GameToJson(game).dump(2) << "\n";
  } else {
    WriteGameFile(game, o.export_path);
  }
  return kExitOk;
}

void AddGameOptions(CLI::App* sub, Options& o) {
  sub->add_option("--preset", o.preset, "preset game name (see list-games)");
  sub->add_option("--param", o.params, "preset parameter key=value")
      ->allow_extra_args(false);
  sub->add_option("--game", o.game_file, "JSON game definition file");
}

void AddRunOptions(CLI::App* sub, Options& o) {
  sub->add_option("--eps", o.eps, "temperature");
  sub->add_option("--gamma", o.gamma, "learning rate");
  sub->add_option("--K", o.gain, "high-pass filter gain");
  sub->add_option("--a", o.pole, "high-pass filter pole");
}

void AddOutputOption(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out_dir,
                  "output directory (GAMEDYN_OUT overrides)");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Exponentially discounted reinforcement learning in games"};
  app.name("gamedyn");
  app.require_subcommand(1, 1);

  CLI::App* classify =
      app.add_subcommand("classify", "monotonicity class and mu");
  AddGameOptions(classify, o);
  AddOutputOption(classify, o);

  CLI::App* solve = app.add_subcommand("solve", "rest points and spectra");
  AddGameOptions(solve, o);
  AddRunOptions(solve, o);
  AddOutputOption(solve, o);

  CLI::App* simulate = app.add_subcommand("simulate", "seeded trajectories");
  AddGameOptions(simulate, o);
  AddRunOptions(simulate, o);
  AddOutputOption(simulate, o);
  simulate->add_option("--scheme", o.scheme,
                       "first-order, higher-order, discrete or stochastic");
  simulate->add_option("--dt", o.dt, "RK4 step");
  simulate->add_option("--t-end", o.t_end, "integration horizon");
  simulate->add_option("--record-every", o.record_every,
                       "keep every k-th step");
  simulate->add_option("--seeds", o.seeds, "comma-separated seeds")
      ->delimiter(',');
  simulate->add_flag("--emit-ternary", o.ternary,
                     "add ternary-projection columns");
  simulate->add_option("--alpha", o.alpha, "discrete or stochastic step size");
  simulate->add_option("--steps", o.steps, "discrete or stochastic steps");
  simulate->add_option("--estimator", o.estimator, "full-info or bandit")
      ->check(CLI::IsMember({"full-info", "bandit"}));
  simulate->add_option("--schedule", o.schedule, "constant or harmonic")
      ->check(CLI::IsMember({"constant", "harmonic"}));

  CLI::App* bifurcation =
      app.add_subcommand("bifurcation", "critical temperature");
  AddGameOptions(bifurcation, o);
  AddOutputOption(bifurcation, o);
  bifurcation->add_option("--scheme", o.scheme, "first-order or higher-order");
  bifurcation->add_option("--gamma", o.gamma, "learning rate");
  bifurcation->add_option("--K", o.gain, "high-pass filter gain");
  bifurcation->add_option("--a", o.pole, "high-pass filter pole");
  bifurcation->add_option("--eps-min", o.eps_min, "search range start");
  bifurcation->add_option("--eps-max", o.eps_max, "search range end");
  bifurcation->add_option("--tol", o.tol, "bracket width");

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "run the checks of a built-in example");
  reproduce->add_option("id", o.example_id, "example id or 'all'")
      ->required();

  CLI::App* list_games =
      app.add_subcommand("list-games", "presets and example ids");

  CLI::App* export_game =
      app.add_subcommand("export-game", "write a game as JSON");
  AddGameOptions(export_game, o);
  export_game->add_option("--to", o.export_path, "file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return Classify(o, out);
    if (solve->parsed()) return Solve(o, out);
    if (simulate->parsed()) return Simulate(o, out);
    if (bifurcation->parsed()) return Bifurcation(o, out);
    if (reproduce->parsed()) return Reproduce(o, out, err);
    if (list_games->parsed()) return ListGames(out);
    if (export_game->parsed()) return ExportGame(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gamedyn
