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

#include "gamedyn/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include <Eigen/Eigenvalues>

#include "gamedyn/choice_map.h"
#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

Eigen::VectorXd FixedPointGap(const Eigen::VectorXd& z, const GameSpec& game,
                              Temperature eps) {
  const MixedProfile x = Softmax(z, eps, game.layout());
  return ExpectedPayoffVectorUnchecked(game, x.values()) - z;
}

Eigen::MatrixXd GapJacobian(const Eigen::VectorXd& z, const GameSpec& game,
                            Temperature eps) {
  const Eigen::VectorXd x = Softmax(z, eps, game.layout()).values();
  const auto n = z.size();
  return PayoffJacobian(game, x) * SoftmaxJacobian(z, eps, game.layout()) -
         Eigen::MatrixXd::Identity(n, n);
}

struct NewtonOutcome {
  Eigen::VectorXd z;
  double residual;
  int iterations;
};

// Newton on z - U(softmax(z)) = 0 with a backtracking line search on the
// squared 2-norm of the gap.
NewtonOutcome Newton(Eigen::VectorXd z, const GameSpec& game, Temperature eps,
                     int max_iterations, double tolerance) {
  Eigen::VectorXd gap = FixedPointGap(z, game, eps);
  int it = 0;
  for (; it < max_iterations; ++it) {
    if (gap.lpNorm<Eigen::Infinity>() < tolerance) break;
    const Eigen::VectorXd step =
        GapJacobian(z, game, eps).colPivHouseholderQr().solve(-gap);
    if (!step.allFinite()) break;
    const double merit = gap.squaredNorm();
    double t = 1.0;
    bool accepted = false;
    while (t > 1e-12) {
      const Eigen::VectorXd trial = z + t * step;
      const Eigen::VectorXd trial_gap = FixedPointGap(trial, game, eps);
      if (trial_gap.squaredNorm() <= (1.0 - 1e-4 * t) * merit) {
        z = trial;
        gap = trial_gap;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
  }
  return {std::move(z), gap.lpNorm<Eigen::Infinity>(), it};
}

// Tracks the rest point from a temperature where softmax o U is a
// contraction down to `eps`, with Newton at each stop. Halves the step when
// Newton fails to converge.
std::optional<Eigen::VectorXd> Continuation(const GameSpec& game,
                                            Temperature eps,
                                            const RestPointOptions& options,
                                            long* iterations) {
  const double target = eps.value();
  double current = std::max(target, 4.0 * std::max(1.0, MaxAbsPayoff(game)));
  Eigen::VectorXd z = Eigen::VectorXd::Zero(game.total_actions());
  NewtonOutcome start = Newton(z, game, Temperature(current),
                               options.max_newton_iterations,
                               options.polish_tolerance);
  *iterations += start.iterations;
  if (start.residual > options.accept_tolerance) return std::nullopt;
  z = std::move(start.z);
  double ratio = 0.8;
  while (current > target) {
    const double next = std::max(target, current * ratio);
    NewtonOutcome step = Newton(z, game, Temperature(next),
                                options.max_newton_iterations,
                                options.polish_tolerance);
    *iterations += step.iterations;
    if (step.residual <= options.accept_tolerance) {
      z = std::move(step.z);
      current = next;
      ratio = std::max(0.5, ratio * ratio);
    } else {
      ratio = std::sqrt(ratio);
      if (ratio > 1.0 - 1e-6) return std::nullopt;
    }
  }
  return z;
}

}  // namespace

double RestPointResidual(const Eigen::VectorXd& z, const GameSpec& game,
                         Temperature eps) {
  if (z.size() != game.total_actions() || !z.allFinite()) {
    throw DomainError("score vector does not match the game");
  }
  return FixedPointGap(z, game, eps).lpNorm<Eigen::Infinity>();
}

RestPointResult SolveRestPoint(const GameSpec& game, Temperature eps,
                               const Eigen::VectorXd& z0,
                               const RestPointOptions& options) {
  if (z0.size() != game.total_actions() || !z0.allFinite()) {
    throw DomainError("initial scores do not match the game");
  }
  if (!(options.beta > 0.0 && options.beta <= 1.0)) {
    throw DomainError("damping must lie in (0, 1]");
  }

  // Damped sweep z <- z + beta (U(softmax(z)) - z). A step that raises the
  // residual is rejected and beta halved; a run of accepted steps lets beta
  // recover. Gives up early once the sweep stops making progress.
  Eigen::VectorXd z = z0;
  Eigen::VectorXd gap = FixedPointGap(z, game, eps);
  double residual = gap.lpNorm<Eigen::Infinity>();
  double beta = options.beta;
  int streak = 0;
  long last_progress = 0;
  double progress_mark = residual;
  long it = 0;
  for (; it < options.max_damped_iterations; ++it) {
    if (residual < options.damped_tolerance) break;
    const Eigen::VectorXd trial = z + beta * gap;
    const Eigen::VectorXd trial_gap = FixedPointGap(trial, game, eps);
    const double trial_residual = trial_gap.lpNorm<Eigen::Infinity>();
    if (trial_residual <= residual) {
      z = trial;
      gap = trial_gap;
      residual = trial_residual;
      if (++streak >= 10) {
        beta = std::min(options.beta, 1.5 * beta);
        streak = 0;
      }
    } else {
      beta *= 0.5;
      streak = 0;
      if (beta < 1e-8) break;
    }
    if (residual < 0.5 * progress_mark) {
      progress_mark = residual;
      last_progress = it;
    } else if (it - last_progress > 2000) {
      break;
    }
  }

  RestPointResult result;
  result.iterations = it;
  if (residual < options.polish_tolerance) {
    result.method = "damped";
  } else {
    const bool damped_ok = residual < options.damped_tolerance;
    // Polish a converged sweep; otherwise fall back to a globalized Newton
    // from the best sweep iterate, with a larger budget.
    const int budget = damped_ok ? options.max_newton_iterations
                                 : 4 * options.max_newton_iterations;
    NewtonOutcome newton =
        Newton(z, game, eps, budget, options.polish_tolerance);
    if (newton.residual < residual) {
      z = std::move(newton.z);
      residual = newton.residual;
    }
    result.iterations += newton.iterations;
    result.method = damped_ok ? "damped+newton" : "newton";
  }
  if (residual > options.accept_tolerance && options.max_newton_iterations > 0) {
    // Newton can stall in a local minimum of its merit function far from a
    // repelling rest point. Follow the branch that starts at the unique rest
    // point of a hot game instead.
    long steps = 0;
    if (std::optional<Eigen::VectorXd> branch =
            Continuation(game, eps, options, &steps)) {
      const double branch_residual =
          FixedPointGap(*branch, game, eps).lpNorm<Eigen::Infinity>();
      result.iterations += steps;
      if (branch_residual < residual) {
        z = std::move(*branch);
        residual = branch_residual;
        result.method = "continuation";
      }
    }
  }
  result.found = residual <= options.accept_tolerance;
  if (!result.found) result.method = "not-found";
  result.x = Softmax(z, eps, game.layout()).values();
  result.z = std::move(z);
  result.residual = residual;
  return result;
}

std::vector<RestPointResult> MultiStartRestPoints(
    const GameSpec& game, Temperature eps, int starts, std::uint64_t seed,
    const RestPointOptions& options) {
  const double spread = std::max(1.0, MaxAbsPayoff(game));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-spread, spread);
  // The damped sweep only reaches attracting rest points, so every start is
  // also handed straight to Newton, which can land on repelling ones.
  RestPointOptions newton_only = options;
  newton_only.max_damped_iterations = 0;
  std::vector<RestPointResult> distinct;
  const auto keep = [&](RestPointResult r) {
    if (!r.found) return;
    const bool seen = std::any_of(
        distinct.begin(), distinct.end(), [&](const RestPointResult& d) {
          return (d.z - r.z).lpNorm<Eigen::Infinity>() <= 1e-6;
        });
    if (!seen) distinct.push_back(std::move(r));
  };
  for (int s = 0; s < starts; ++s) {
    Eigen::VectorXd z0(game.total_actions());
    for (int i = 0; i < z0.size(); ++i) z0[i] = unit(rng);
    keep(SolveRestPoint(game, eps, z0, options));
    keep(SolveRestPoint(game, eps, z0, newton_only));
  }
  std::sort(distinct.begin(), distinct.end(),
            [](const RestPointResult& a, const RestPointResult& b) {
              return std::lexicographical_compare(
                  a.x.data(), a.x.data() + a.x.size(), b.x.data(),
                  b.x.data() + b.x.size());
            });
  return distinct;
}

double FixedPointDefect(const GameSpec& game, Temperature eps,
                        const Eigen::VectorXd& x) {
  const MixedProfile profile(x, game.layout());
  const Eigen::VectorXd u = ExpectedPayoffVector(game, profile);
  return (Softmax(u, eps, game.layout()).values() - x)
      .lpNorm<Eigen::Infinity>();
}

Eigen::MatrixXd NumericalJacobian(const VectorField& field,
                                  const Eigen::VectorXd& at, double step) {
  const Eigen::VectorXd f0 = field(at);
  Eigen::MatrixXd jac(f0.size(), at.size());
  Eigen::VectorXd probe = at;
  for (int j = 0; j < at.size(); ++j) {
    const double h = step * std::max(1.0, std::abs(at[j]));
    probe[j] = at[j] + h;
    const Eigen::VectorXd plus = field(probe);
    probe[j] = at[j] - h;
    const Eigen::VectorXd minus = field(probe);
    probe[j] = at[j];
    jac.col(j) = (plus - minus) / (2.0 * h);
  }
  return jac;
}

Eigen::MatrixXd FirstOrderJacobian(const Eigen::VectorXd& z,
                                   const GameSpec& game,
                                   const FirstOrderParams& params) {
  params.Validate();
  if (z.size() != game.total_actions() || !z.allFinite()) {
    throw DomainError("score vector does not match the game");
  }
  const Eigen::VectorXd x = Softmax(z, params.eps, game.layout()).values();
  const Eigen::MatrixXd coupled = PayoffJacobian(game, x) *
                                  SoftmaxJacobian(z, params.eps, game.layout());
  if (params.undiscounted) return coupled;
  return params.gamma *
         (coupled - Eigen::MatrixXd::Identity(z.size(), z.size()));
}

Eigen::MatrixXd HigherOrderJacobian(const Eigen::VectorXd& packed,
                                    const HigherOrderSystem& system) {
  const GameSpec& game = system.game();
  const FirstOrderParams& params = system.params();
  const FeedbackBlock& block = system.block();
  const int n = game.total_actions();
  if (packed.size() != 2 * n || !packed.allFinite()) {
    throw DomainError("packed state does not match the game");
  }
  const Eigen::VectorXd z = packed.head(n);
  const Eigen::VectorXd x = Softmax(z, params.eps, game.layout()).values();
  const Eigen::MatrixXd ds = SoftmaxJacobian(z, params.eps, game.layout());
  const Eigen::MatrixXd du = PayoffJacobian(game, x);
  Eigen::MatrixXd jac(2 * n, 2 * n);
  jac.topLeftCorner(n, n) =
      params.gamma *
      (du * ds - Eigen::MatrixXd::Identity(n, n) - block.d * ds);
  jac.topRightCorner(n, n) = -params.gamma * block.c;
  jac.bottomLeftCorner(n, n) = block.b * ds;
  jac.bottomRightCorner(n, n) = block.a;
  return jac;
}

Eigen::VectorXd HigherOrderRestState(const Eigen::VectorXd& z_star,
                                     const HigherOrderSystem& system) {
  const MixedProfile x =
      Softmax(z_star, system.params().eps, system.game().layout());
  HigherOrderState state{z_star, system.FilterRestState(x.values())};
  return state.Pack();
}

SpectrumReport AnalyzeSpectrum(const Eigen::MatrixXd& jacobian,
                               const ActionLayout& layout) {
  const int n = layout.total();
  if (jacobian.rows() != jacobian.cols() || jacobian.rows() % n != 0) {
    throw DomainError("Jacobian shape does not match the layout");
  }
  const int copies = static_cast<int>(jacobian.rows()) / n;
  const Eigen::MatrixXd e = MakeTangentBasis(layout).full;
  const Eigen::MatrixXcd projector = (e * e.transpose()).cast<std::complex<double>>();

  Eigen::EigenSolver<Eigen::MatrixXd> solver(jacobian);
  SpectrumReport report;
  report.abscissa = -std::numeric_limits<double>::infinity();
  double all_max = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < jacobian.rows(); ++k) {
    const std::complex<double> lambda = solver.eigenvalues()[k];
    Eigen::VectorXcd v = solver.eigenvectors().col(k);
    v /= v.norm();
    bool tangent = false;
    for (int c = 0; c < copies; ++c) {
      if ((projector * v.segment(c * n, n)).norm() > 1e-8) tangent = true;
    }
    report.eigenvalues.push_back(lambda);
    report.tangent.push_back(tangent);
    all_max = std::max(all_max, lambda.real());
    if (tangent) report.abscissa = std::max(report.abscissa, lambda.real());
  }
  if (!std::isfinite(report.abscissa)) report.abscissa = all_max;
  return report;
}

BifurcationResult BifurcationEpsilon(const GameSpec& game,
                                     const FirstOrderParams& params,
                                     const std::optional<FeedbackBlock>& block,
                                     const BifurcationOptions& options) {
  params.Validate();
  if (!(options.eps_min > 0.0 && options.eps_max > options.eps_min) ||
      !(options.tolerance > 0.0)) {
    throw UsageError("bifurcation range must satisfy 0 < eps_min < eps_max");
  }
  // Rest points found so far, keyed by epsilon; the nearest one seeds the
  // next solve so the search follows a single branch.
  std::map<double, Eigen::VectorXd> branch;

  const auto abscissa = [&](double eps) -> std::optional<double> {
    Eigen::VectorXd warm = Eigen::VectorXd::Zero(game.total_actions());
    if (!branch.empty()) {
      auto nearest = branch.begin();
      for (auto it = branch.begin(); it != branch.end(); ++it) {
        if (std::abs(it->first - eps) < std::abs(nearest->first - eps)) {
          nearest = it;
        }
      }
      warm = nearest->second;
    }
    const Temperature temperature(eps);
    RestPointResult rest = SolveRestPoint(game, temperature, warm);
    if (!rest.found) {
      std::vector<RestPointResult> all =
          MultiStartRestPoints(game, temperature);
      if (all.empty()) return std::nullopt;
      rest = std::move(all.front());
    }
    branch[eps] = rest.z;
    FirstOrderParams at = params;
    at.eps = temperature;
    Eigen::MatrixXd jac;
    if (block) {
      const HigherOrderSystem system(game, at, *block);
      jac = HigherOrderJacobian(HigherOrderRestState(rest.z, system), system);
    } else {
      jac = FirstOrderJacobian(rest.z, game, at);
    }
    return AnalyzeSpectrum(jac, game.layout()).abscissa;
  };

  BifurcationResult result;
  result.bracket_low = options.eps_min;
  result.bracket_high = options.eps_max;
  const std::optional<double> high = abscissa(options.eps_max);
  const std::optional<double> low = abscissa(options.eps_min);
  if (!high || !low) {
    result.status = "rest-point-not-found";
    return result;
  }
  result.abscissa_low = *low;
  result.abscissa_high = *high;
  if ((*low > 0.0) == (*high > 0.0)) {
    result.status = "no-bifurcation-in-range";
    return result;
  }
  double lo = options.eps_min;
  double hi = options.eps_max;
  const bool low_positive = *low > 0.0;
  while (hi - lo > options.tolerance &&
         result.iterations < options.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const std::optional<double> value = abscissa(mid);
    ++result.iterations;
    if (!value) {
      result.status = "rest-point-not-found";
      return result;
    }
    if ((*value > 0.0) == low_positive) {
      lo = mid;
      result.abscissa_low = *value;
    } else {
      hi = mid;
      result.abscissa_high = *value;
    }
  }
  result.status = "found";
  result.bracket_low = lo;
  result.bracket_high = hi;
  result.eps_star = 0.5 * (lo + hi);
  return result;
}

}  // namespace gamedyn
