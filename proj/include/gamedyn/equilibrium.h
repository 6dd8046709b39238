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

#ifndef GAMEDYN_EQUILIBRIUM_H_
#define GAMEDYN_EQUILIBRIUM_H_

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gamedyn/dynamics.h"
#include "gamedyn/feedback_block.h"
#include "gamedyn/game.h"
#include "gamedyn/integrator.h"

namespace gamedyn {

struct RestPointOptions {
  double beta = 0.5;             // initial damping of the fixed-point sweep
  double damped_tolerance = 1e-8;
  double polish_tolerance = 1e-12;
  long max_damped_iterations = 100000;
  int max_newton_iterations = 50;
  // Success threshold on the final residual.
  double accept_tolerance = 1e-10;
};

struct RestPointResult {
  bool found = false;
  Eigen::VectorXd z;  // best iterate
  Eigen::VectorXd x;  // softmax(z)
  double residual = 0.0;  // || z - U(softmax(z)) ||_inf
  long iterations = 0;
  // "damped", "damped+newton", "newton", "continuation" or "not-found".
  std::string method;
};

// Residual || z - U(softmax(z)) ||_inf.
double RestPointResidual(const Eigen::VectorXd& z, const GameSpec& game,
                         Temperature eps);

// Solves z = U(softmax(z)). Never throws on non-convergence; check `found`.
RestPointResult SolveRestPoint(const GameSpec& game, Temperature eps,
                               const Eigen::VectorXd& z0,
                               const RestPointOptions& options = {});

// Solves from `starts` seeded initial scores uniform in [-spread, spread]^n
// and keeps the distinct successes (|dz|_inf > 1e-6), sorted by x.
std::vector<RestPointResult> MultiStartRestPoints(
    const GameSpec& game, Temperature eps, int starts = 20,
    std::uint64_t seed = 0, const RestPointOptions& options = {});

// || softmax(U(x)) - x ||_inf.
double FixedPointDefect(const GameSpec& game, Temperature eps,
                        const Eigen::VectorXd& x);

// Central-difference Jacobian of an arbitrary field.
Eigen::MatrixXd NumericalJacobian(const VectorField& field,
                                  const Eigen::VectorXd& at,
                                  double step = 1e-6);

// gamma (DU Dsigma - I), or DU Dsigma for the undiscounted variant.
Eigen::MatrixXd FirstOrderJacobian(const Eigen::VectorXd& z,
                                   const GameSpec& game,
                                   const FirstOrderParams& params);

// Linearization of the higher-order field at the packed state [z; xi]:
// [[gamma (DU Ds - I - D Ds), -gamma C], [B Ds, A]].
Eigen::MatrixXd HigherOrderJacobian(const Eigen::VectorXd& packed,
                                    const HigherOrderSystem& system);

// Packs the rest point of the higher-order scheme that sits over z.
Eigen::VectorXd HigherOrderRestState(const Eigen::VectorXd& z_star,
                                     const HigherOrderSystem& system);

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  // Whether each eigenvalue moves the tangent part of the state.
  std::vector<bool> tangent;
  // Max real part over tangent modes.
  double abscissa = 0.0;
};

// Eigen-decomposition of a Jacobian whose state is one or more stacked
// copies of the layout (z, or [z; xi]). Modes whose eigenvector has a tangent
// projection of norm <= 1e-8 in every copy are structural and are excluded
// from the abscissa.
SpectrumReport AnalyzeSpectrum(const Eigen::MatrixXd& jacobian,
                               const ActionLayout& layout);

struct BifurcationOptions {
  double eps_min = 0.05;
  double eps_max = 5.0;
  double tolerance = 1e-4;
  int max_iterations = 200;
};

struct BifurcationResult {
  // "found" or "no-bifurcation-in-range" or "rest-point-not-found".
  std::string status;
  double eps_star = 0.0;
  int iterations = 0;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  double abscissa_low = 0.0;
  double abscissa_high = 0.0;
};

// Bisection on the tangent-mode spectral abscissa of the linearization at
// the epsilon-dependent rest point. With a block the higher-order
// linearization is used.
BifurcationResult BifurcationEpsilon(
    const GameSpec& game, const FirstOrderParams& params,
    const std::optional<FeedbackBlock>& block,
    const BifurcationOptions& options = {});

}  // namespace gamedyn

#endif  // GAMEDYN_EQUILIBRIUM_H_
