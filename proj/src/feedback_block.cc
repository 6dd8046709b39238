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

#include "gamedyn/feedback_block.h"

#include <cmath>
#include <limits>

#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

constexpr double kDcGainTolerance = 1e-10;

void CheckShapes(const FeedbackBlock& block) {
  const auto n = block.a.rows();
  for (const Eigen::MatrixXd* m : {&block.a, &block.b, &block.c, &block.d}) {
    if (m->rows() != n || m->cols() != n) {
      throw ConfigurationError(
          "feedback block matrices must be square and of equal size");
    }
  }
  if (n == 0) throw ConfigurationError("empty feedback block");
}

}  // namespace

FeedbackBlock FeedbackBlock::HighPass(const ActionLayout& layout, double gain,
                                      double pole) {
  if (!(gain > 0.0) || !(pole > 0.0)) {
    throw ConfigurationError("high-pass filter needs K > 0 and a > 0");
  }
  const int n = layout.total();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  return {-pole * eye, -pole * eye, gain * eye, gain * eye};
}

FeedbackBlock FeedbackBlock::FromPlayerBlocks(
    const ActionLayout& layout, const std::vector<FeedbackBlock>& players) {
  if (static_cast<int>(players.size()) != layout.players()) {
    throw ConfigurationError("need one filter per player");
  }
  const int n = layout.total();
  FeedbackBlock out{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n),
                    Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
  for (int p = 0; p < layout.players(); ++p) {
    const FeedbackBlock& f = players[p];
    CheckShapes(f);
    const int m = layout.count(p);
    if (f.size() != m) {
      throw ConfigurationError("filter for player " + std::to_string(p) +
                               " has the wrong size");
    }
    const int o = layout.offset(p);
    out.a.block(o, o, m, m) = f.a;
    out.b.block(o, o, m, m) = f.b;
    out.c.block(o, o, m, m) = f.c;
    out.d.block(o, o, m, m) = f.d;
  }
  return out;
}

Eigen::MatrixXcd TransferMatrix(const FeedbackBlock& block,
                                std::complex<double> s) {
  CheckShapes(block);
  const int n = block.size();
  const Eigen::MatrixXcd resolvent =
      s * Eigen::MatrixXcd::Identity(n, n) - block.a.cast<std::complex<double>>();
  return block.c.cast<std::complex<double>>() *
             resolvent.partialPivLu().solve(block.b.cast<std::complex<double>>()) +
         block.d.cast<std::complex<double>>();
}

FeedbackBlockReport VerifyFeedbackBlock(const FeedbackBlock& block,
                                        const FrequencyGrid& grid) {
  CheckShapes(block);
  if (grid.points < 2 || !(grid.low > 0.0) || !(grid.high > grid.low)) {
    throw ConfigurationError("invalid frequency grid");
  }
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(block.a);
  if (!lu.isInvertible()) {
    throw ConfigurationError("filter state matrix A is singular");
  }

  FeedbackBlockReport report;
  report.spectral_abscissa = block.a.eigenvalues().real().maxCoeff();
  report.hurwitz = report.spectral_abscissa < 0.0;

  const Eigen::MatrixXd dc = -block.c * lu.solve(block.b) + block.d;
  report.dc_gain_norm = dc.lpNorm<Eigen::Infinity>();
  report.zero_dc_gain = report.dc_gain_norm <= kDcGainTolerance;

  report.min_hermitian_eigenvalue = std::numeric_limits<double>::infinity();
  const double log_low = std::log10(grid.low);
  const double step = (std::log10(grid.high) - log_low) / (grid.points - 1);
  for (int k = 0; k < grid.points; ++k) {
    const double w = std::pow(10.0, log_low + step * k);
    const Eigen::MatrixXcd h = TransferMatrix(block, {0.0, w});
    const Eigen::MatrixXcd herm = 0.5 * (h + h.adjoint());
    const double lowest =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(herm, Eigen::EigenvaluesOnly)
            .eigenvalues()
            .minCoeff();
    if (lowest < report.min_hermitian_eigenvalue) {
      report.min_hermitian_eigenvalue = lowest;
      report.worst_frequency = w;
    }
  }
  report.grid_positive_real = report.min_hermitian_eigenvalue > 0.0;
  return report;
}

}  // namespace gamedyn
