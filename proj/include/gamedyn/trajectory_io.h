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

#ifndef GAMEDYN_TRAJECTORY_IO_H_
#define GAMEDYN_TRAJECTORY_IO_H_

#include <ostream>
#include <string>
#include <vector>

#include "gamedyn/game.h"
#include "gamedyn/integrator.h"
#include "gamedyn/stochastic.h"

namespace gamedyn {

struct CsvOptions {
  // States carry a filter part [z; xi].
  bool filter_state = false;
  // Write traj.lyapunov as a trailing V column (when non-empty).
  bool lyapunov = true;
  // Add u/v ternary-projection columns for every 3-action player.
  bool ternary = false;
};

// Columns: t, z_1..z_n, [xi_1..xi_n], x_1..x_n, [V], [tern_p_u, tern_p_v].
// Floats are written with 17 significant digits.
void WriteTrajectoryCsv(std::ostream& out, const Trajectory& traj,
                        const ActionLayout& layout,
                        const CsvOptions& options = {});
void WriteTrajectoryCsvFile(const std::string& path, const Trajectory& traj,
                            const ActionLayout& layout,
                            const CsvOptions& options = {});

// Columns: k, a_1..a_m, pi_1..pi_r, z_1..z_n, x_1..x_n.
void WriteStochasticCsv(std::ostream& out,
                        const std::vector<StochasticRecord>& records,
                        const ActionLayout& layout);

// Planar coordinates of a point on the 2-simplex with vertices (0, 0),
// (1, 0) and (1/2, sqrt(3)/2).
std::pair<double, double> TernaryProjection(double x1, double x2, double x3);

}  // namespace gamedyn

#endif  // GAMEDYN_TRAJECTORY_IO_H_
