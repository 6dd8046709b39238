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

#ifndef GAMEDYN_FEEDBACK_BLOCK_H_
#define GAMEDYN_FEEDBACK_BLOCK_H_

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gamedyn/game.h"

namespace gamedyn {

// LTI payoff-adjustment filter xi' = A xi + B x, v = C xi + D x. The
// matrices are stored block-diagonally over players (n x n overall).
struct FeedbackBlock {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  Eigen::MatrixXd c;
  Eigen::MatrixXd d;

  int size() const { return static_cast<int>(a.rows()); }

  // K s / (s + a) on every action: A = B = -a I, C = D = K I.
  static FeedbackBlock HighPass(const ActionLayout& layout, double gain,
                                double pole);
  // Places one (A, B, C, D) quadruple of n^p x n^p matrices per player on the
  // block diagonal. Throws ConfigurationError on shape mismatch.
  static FeedbackBlock FromPlayerBlocks(
      const ActionLayout& layout, const std::vector<FeedbackBlock>& players);
};

struct FrequencyGrid {
  double low = 1e-3;
  double high = 1e3;
  int points = 200;
};

struct FeedbackBlockReport {
  bool hurwitz = false;
  double spectral_abscissa = 0.0;  // max real part of eig(A)
  bool zero_dc_gain = false;
  double dc_gain_norm = 0.0;  // || -C A^{-1} B + D ||_inf
  bool grid_positive_real = false;
  double min_hermitian_eigenvalue = 0.0;  // over the grid
  double worst_frequency = 0.0;

  bool passed() const { return hurwitz && zero_dc_gain && grid_positive_real; }
};

// H(s) = C (sI - A)^{-1} B + D.
Eigen::MatrixXcd TransferMatrix(const FeedbackBlock& block,
                                std::complex<double> s);

// Checks the three conditions that make the filter preserve rest points and
// passivity: A Hurwitz, H(0) = 0, and Re H(jw) > 0 on a log-spaced grid.
// Throws ConfigurationError for non-square or mismatched matrices and for a
// singular A.
FeedbackBlockReport VerifyFeedbackBlock(const FeedbackBlock& block,
                                        const FrequencyGrid& grid = {});

}  // namespace gamedyn

#endif  // GAMEDYN_FEEDBACK_BLOCK_H_
