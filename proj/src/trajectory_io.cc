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

#include "gamedyn/trajectory_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void Columns(std::ostream& out, const char* prefix, int count) {
  for (int i = 1; i <= count; ++i) out << ',' << prefix << i;
}

}  // namespace

std::pair<double, double> TernaryProjection(double x1, double x2, double x3) {
  (void)x1;
  return {x2 + 0.5 * x3, 0.5 * std::sqrt(3.0) * x3};
}

void WriteTrajectoryCsv(std::ostream& out, const Trajectory& traj,
                        const ActionLayout& layout, const CsvOptions& options) {
  const int n = layout.total();
  const int state_length = options.filter_state ? 2 * n : n;
  const bool with_v =
      options.lyapunov && traj.lyapunov.size() == traj.times.size() &&
      !traj.lyapunov.empty();
  if (traj.strategies.size() != traj.times.size()) {
    throw UsageError("trajectory has no recorded strategies");
  }
  out << 't';
  Columns(out, "z_", n);
  if (options.filter_state) Columns(out, "xi_", n);
  Columns(out, "x_", n);
  if (with_v) out << ",V";
  std::vector<int> ternary_players;
  if (options.ternary) {
    for (int p = 0; p < layout.players(); ++p) {
      if (layout.count(p) == 3) {
        ternary_players.push_back(p);
        out << ",tern_" << p + 1 << "_u,tern_" << p + 1 << "_v";
      }
    }
  }
  out << '\n';
  for (int k = 0; k < traj.size(); ++k) {
    const Eigen::VectorXd& s = traj.states[k];
    if (s.size() != state_length) {
      throw DomainError("trajectory state length does not match the layout");
    }
    const Eigen::VectorXd& x = traj.strategies[k];
    out << Num(traj.times[k]);
    for (int i = 0; i < state_length; ++i) out << ',' << Num(s[i]);
    for (int i = 0; i < n; ++i) out << ',' << Num(x[i]);
    if (with_v) out << ',' << Num(traj.lyapunov[k]);
    for (int p : ternary_players) {
      const int o = layout.offset(p);
      const auto [u, v] = TernaryProjection(x[o], x[o + 1], x[o + 2]);
      out << ',' << Num(u) << ',' << Num(v);
    }
    out << '\n';
  }
}

void WriteTrajectoryCsvFile(const std::string& path, const Trajectory& traj,
                            const ActionLayout& layout,
                            const CsvOptions& options) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  WriteTrajectoryCsv(out, traj, layout, options);
}

void WriteStochasticCsv(std::ostream& out,
                        const std::vector<StochasticRecord>& records,
                        const ActionLayout& layout) {
  const int n = layout.total();
  const int actions = records.empty()
                          ? layout.players()
                          : static_cast<int>(records.front().actions.size());
  const int payoffs = records.empty()
                          ? layout.players()
                          : static_cast<int>(records.front().payoffs.size());
  out << 'k';
  Columns(out, "a_", actions);
  Columns(out, "pi_", payoffs);
  Columns(out, "z_", n);
  Columns(out, "x_", n);
  out << '\n';
  for (const StochasticRecord& r : records) {
    out << r.k;
    for (int a : r.actions) out << ',' << a;
    for (double pi : r.payoffs) out << ',' << Num(pi);
    for (int i = 0; i < n; ++i) out << ',' << Num(r.z[i]);
    for (int i = 0; i < n; ++i) out << ',' << Num(r.x[i]);
    out << '\n';
  }
}

}  // namespace gamedyn
