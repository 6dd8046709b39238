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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace gamedyn {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gamedyn_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST_CASE("classify prints the report and writes it") {
  const fs::path dir = FreshDir("classify");
  const Outcome r = Run({"classify", "--preset", "rps", "--param", "l=5",
                         "--out", dir.string()});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["class"] == "hypo-monotone");
  CHECK(doc["mu"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(nlohmann::json::parse(Slurp(dir / "classification.json")) == doc);

  const auto mp = nlohmann::json::parse(
      Run({"classify", "--preset", "matching_pennies", "--out", dir.string()})
          .out);
  CHECK(mp["class"] == "null-monotone");
  CHECK(mp["mu"].get<double>() == 0.0);
  const auto sh = nlohmann::json::parse(
      Run({"classify", "--preset", "shapley", "--out", dir.string()}).out);
  CHECK(sh["mu"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("usage errors exit with 2") {
  const std::string out = FreshDir("usage").string();
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"classify", "--out", out},
      {"classify", "--preset", "nope", "--out", out},
      {"classify", "--preset", "rps", "--out", out},
      {"classify", "--preset", "rps", "--param", "l", "--out", out},
      {"classify", "--preset", "rps", "--param", "l=abc", "--out", out},
      {"classify", "--preset", "rps", "--param", "l=1", "--param", "q=2",
       "--out", out},
      {"classify", "--game", "/nonexistent/game.json", "--out", out},
      {"solve", "--preset", "matching_pennies", "--eps", "0", "--out", out},
      {"simulate", "--preset", "matching_pennies", "--scheme", "fourth",
       "--out", out},
      {"simulate", "--preset", "matching_pennies", "--gamma", "-1", "--out",
       out},
      {"simulate", "--preset", "matching_pennies", "--dt", "0", "--out", out},
      {"simulate", "--preset", "matching_pennies", "--estimator", "psychic",
       "--out", out},
      {"simulate", "--preset", "matching_pennies", "--scheme", "higher-order",
       "--a", "-1", "--out", out},
      {"bifurcation", "--preset", "rps", "--param", "l=8", "--eps-min", "2",
       "--eps-max", "1", "--out", out},
  };
  for (const auto& args : bad) {
    std::string line;
    for (const auto& a : args) line += a + " ";
    CAPTURE(line);
    const Outcome r = Run(args);
    CHECK(r.code == kExitUsage);
    CHECK(!r.err.empty());
  }
}

TEST_CASE("reproduce exit codes") {
  const Outcome unknown = Run({"reproduce", "99"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("1-l8") != std::string::npos);

  const Outcome ok = Run({"reproduce", "1-l1"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("[FAIL]") == std::string::npos);
  CHECK(ok.out.find("expected:") != std::string::npos);
  CHECK(ok.out.find("tolerance:") != std::string::npos);

  // The anti-coordination reference values are not met by the exact
  // rest point, so this example reports a check failure.
  const Outcome failing = Run({"reproduce", "2"});
  CHECK(failing.code == kExitCheckFailed);
  CHECK(failing.out.find("[FAIL]") != std::string::npos);
}

TEST_CASE("simulate is deterministic per seed") {
  const fs::path a = FreshDir("sim_a");
  const fs::path b = FreshDir("sim_b");
  for (const std::string scheme :
       {"first-order", "higher-order", "discrete", "stochastic"}) {
    CAPTURE(scheme);
    for (const fs::path& dir : {a, b}) {
      const Outcome r = Run({"simulate", "--preset", "modified_rps_Abar",
                             "--scheme", scheme, "--eps", "0.5", "--seeds",
                             "3,7", "--t-end", "20", "--steps", "500",
                             "--record-every", "5", "--emit-ternary", "--out",
                             dir.string()});
      REQUIRE(r.code == kExitOk);
    }
    for (const std::string seed : {"3", "7"}) {
      const std::string name = scheme + "_seed" + seed + ".csv";
      const std::string text = Slurp(a / name);
      CHECK(!text.empty());
      CHECK(text == Slurp(b / name));
    }
    CHECK(Slurp(a / "summary.json") == Slurp(b / "summary.json"));
  }
  const std::string header =
      Slurp(a / "higher-order_seed3.csv").substr(0, 64);
  CHECK(header.rfind("t,z_1,z_2,z_3,xi_1,xi_2,xi_3,x_1,x_2,x_3,V,tern_1_u",
                     0) == 0);
  const auto summary = nlohmann::json::parse(Slurp(a / "summary.json"));
  CHECK(summary["runs"].size() == 2);
  CHECK(summary["runs"][0]["seed"] == 3);
}

TEST_CASE("different seeds give different trajectories") {
  const fs::path dir = FreshDir("seeds");
  REQUIRE(Run({"simulate", "--preset", "matching_pennies", "--seeds", "1,2",
               "--t-end", "5", "--out", dir.string()})
              .code == kExitOk);
  CHECK(Slurp(dir / "first-order_seed1.csv") !=
        Slurp(dir / "first-order_seed2.csv"));
}

TEST_CASE("GAMEDYN_OUT overrides --out") {
  const fs::path env_dir = FreshDir("env");
  const fs::path flag_dir = FreshDir("flag");
  setenv("GAMEDYN_OUT", env_dir.c_str(), 1);
  const Outcome r = Run({"classify", "--preset", "shapley", "--out",
                         flag_dir.string()});
  unsetenv("GAMEDYN_OUT");
  CHECK(r.code == kExitOk);
  CHECK(fs::exists(env_dir / "classification.json"));
  CHECK(!fs::exists(flag_dir));
}

TEST_CASE("divergence is reported per seed") {
  const fs::path dir = FreshDir("diverge");
  const Outcome r = Run({"simulate", "--preset", "rps", "--param", "l=8",
                         "--dt", "50", "--t-end", "5000", "--seeds", "0",
                         "--out", dir.string()});
  CHECK(r.code == kExitOk);
  const auto summary = nlohmann::json::parse(Slurp(dir / "summary.json"));
  CHECK(summary["runs"][0]["status"] == "diverged");
}

TEST_CASE("exported games classify like the preset") {
  const fs::path dir = FreshDir("export");
  fs::create_directories(dir);
  const std::string file = (dir / "jordan.json").string();
  REQUIRE(Run({"export-game", "--preset", "jordan_mp", "--to", file}).code ==
          kExitOk);
  const Outcome from_file =
      Run({"classify", "--game", file, "--out", dir.string()});
  const Outcome from_preset =
      Run({"classify", "--preset", "jordan_mp", "--out", dir.string()});
  REQUIRE(from_file.code == kExitOk);
  auto a = nlohmann::json::parse(from_file.out);
  auto b = nlohmann::json::parse(from_preset.out);
  a.erase("game");
  b.erase("game");
  CHECK(a == b);
}

TEST_CASE("solve and bifurcation emit reports") {
  const fs::path dir = FreshDir("solve");
  const Outcome solve = Run({"solve", "--preset", "rps", "--param", "l=8",
                             "--eps", "1", "--out", dir.string()});
  REQUIRE(solve.code == kExitOk);
  const auto points = nlohmann::json::parse(solve.out)["rest_points"];
  REQUIRE(points.size() == 1);
  CHECK(points[0]["first_order"]["stable"] == false);
  CHECK(points[0]["higher_order"]["stable"] == true);

  const Outcome bif = Run({"bifurcation", "--preset", "rps", "--param", "l=8",
                           "--tol", "1e-6", "--out", dir.string()});
  REQUIRE(bif.code == kExitOk);
  const auto doc = nlohmann::json::parse(bif.out);
  CHECK(doc["status"] == "found");
  CHECK(doc["eps_star"].get<double>() ==
        doctest::Approx(7.0 / 6.0).epsilon(1e-5));
}

TEST_CASE("list-games names presets and examples") {
  const Outcome r = Run({"list-games"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("two_player_rps l=<value>") != std::string::npos);
  CHECK(r.out.find("8-Abar-eps0.2") != std::string::npos);
}

}  // namespace
}  // namespace gamedyn
