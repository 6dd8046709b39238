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

#ifndef GAMEDYN_LYAPUNOV_H_
#define GAMEDYN_LYAPUNOV_H_

#include <vector>

#include <Eigen/Dense>

#include "gamedyn/choice_map.h"
#include "gamedyn/feedback_block.h"
#include "gamedyn/game.h"
#include "gamedyn/integrator.h"

namespace gamedyn {

struct LyapunovTraceResult {
  std::vector<double> values;
  bool non_increasing = true;
  double max_increase = 0.0;  // largest forward difference (may be < 0)
};

// Checks a sequence against the forward-difference tolerance.
LyapunovTraceResult MonotonicityVerdict(std::vector<double> values,
                                        double tolerance = 1e-9);

// V(z(t_k)) = BregmanLse(z(t_k), z_star) along a trajectory. The first n
// entries of each state are the scores, so higher-order trajectories work
// too.
LyapunovTraceResult LyapunovTrace(const Trajectory& traj,
                                  const Eigen::VectorXd& z_star,
                                  Temperature eps, const ActionLayout& layout,
                                  double tolerance = 1e-9);

// Solves A^T P + P A = -Q. Throws ConfigurationError if the system is
// singular.
Eigen::MatrixXd SolveLyapunovEquation(const Eigen::MatrixXd& a,
                                      const Eigen::MatrixXd& q);

// Largest eigenvalue of the dissipation matrix
// [[sym(P A), (P B - C^T) / 2], [(P B - C^T)^T / 2, -sym(D)]], which is
// <= 0 when 0.5 xi^T P xi is a storage function for input x and output v.
double DissipationMaxEigenvalue(const FeedbackBlock& block,
                                const Eigen::MatrixXd& p);

struct StorageMatrix {
  Eigen::MatrixXd p;
  double dissipation_max_eigenvalue = 0.0;
};

// Solves A^T P0 + P0 A = -I, then picks the scale s > 0 minimizing the
// dissipation matrix's largest eigenvalue and returns P = s P0.
StorageMatrix PassivityStorageMatrix(const FeedbackBlock& block);

// W = V(z) + (gamma / 2) (xi - xi_star)^T P (xi - xi_star) along a
// higher-order trajectory of packed [z; xi] states. Throws
// ConfigurationError unless P is symmetric positive definite.
LyapunovTraceResult CompositeLyapunovTrace(
    const Trajectory& traj, const Eigen::VectorXd& z_star,
    const Eigen::VectorXd& xi_star, Temperature eps, double gamma,
    const ActionLayout& layout, const Eigen::MatrixXd& p,
    double tolerance = 1e-9);

}  // namespace gamedyn

#endif  // GAMEDYN_LYAPUNOV_H_
