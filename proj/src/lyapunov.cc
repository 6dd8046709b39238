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

#include "gamedyn/lyapunov.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

Eigen::MatrixXd Sym(const Eigen::MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

void RequireScoreStates(const Trajectory& traj, int min_length) {
  for (const Eigen::VectorXd& s : traj.states) {
    if (s.size() < min_length) {
      throw DomainError("trajectory state shorter than expected");
    }
  }
}

}  // namespace

LyapunovTraceResult MonotonicityVerdict(std::vector<double> values,
                                        double tolerance) {
  LyapunovTraceResult result;
  result.max_increase = -std::numeric_limits<double>::infinity();
  for (size_t k = 1; k < values.size(); ++k) {
    const double diff = values[k] - values[k - 1];
    result.max_increase = std::max(result.max_increase, diff);
    if (diff > tolerance) result.non_increasing = false;
  }
  if (values.size() < 2) result.max_increase = 0.0;
  result.values = std::move(values);
  return result;
}

LyapunovTraceResult LyapunovTrace(const Trajectory& traj,
                                  const Eigen::VectorXd& z_star,
                                  Temperature eps, const ActionLayout& layout,
                                  double tolerance) {
  const int n = layout.total();
  if (z_star.size() != n) throw DomainError("rest point length mismatch");
  RequireScoreStates(traj, n);
  std::vector<double> values;
  values.reserve(traj.states.size());
  for (const Eigen::VectorXd& s : traj.states) {
    values.push_back(BregmanLse(s.head(n), z_star, eps, layout));
  }
  return MonotonicityVerdict(std::move(values), tolerance);
}

Eigen::MatrixXd SolveLyapunovEquation(const Eigen::MatrixXd& a,
                                      const Eigen::MatrixXd& q) {
  const auto n = a.rows();
  if (a.cols() != n || q.rows() != n || q.cols() != n) {
    throw ConfigurationError("Lyapunov equation needs square matrices");
  }
  // vec(A^T P + P A) = (I kron A^T + A^T kron I) vec(P).
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      op.block(i * n, j * n, n, n) += id(i, j) * a.transpose();
      op.block(i * n, j * n, n, n) += a(j, i) * id;
    }
  }
  const Eigen::VectorXd rhs =
      -Eigen::Map<const Eigen::VectorXd>(Eigen::MatrixXd(q).data(), n * n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(op);
  if (!lu.isInvertible()) {
    throw ConfigurationError("Lyapunov equation is singular");
  }
  const Eigen::VectorXd vec = lu.solve(rhs);
  Eigen::MatrixXd p = Eigen::Map<const Eigen::MatrixXd>(vec.data(), n, n);
  return Sym(p);
}

double DissipationMaxEigenvalue(const FeedbackBlock& block,
                                const Eigen::MatrixXd& p) {
  const auto n = block.a.rows();
  Eigen::MatrixXd m(2 * n, 2 * n);
  const Eigen::MatrixXd cross = 0.5 * (p * block.b - block.c.transpose());
  m.topLeftCorner(n, n) = Sym(p * block.a);
  m.topRightCorner(n, n) = cross;
  m.bottomLeftCorner(n, n) = cross.transpose();
  m.bottomRightCorner(n, n) = -Sym(block.d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

StorageMatrix PassivityStorageMatrix(const FeedbackBlock& block) {
  const auto n = block.a.rows();
  const Eigen::MatrixXd p0 =
      SolveLyapunovEquation(block.a, Eigen::MatrixXd::Identity(n, n));
  // The largest eigenvalue is convex in the scale; golden-section search on
  // log(scale).
  const auto objective = [&](double log_scale) {
    return DissipationMaxEigenvalue(block, std::exp(log_scale) * p0);
  };
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::log(1e-8);
  double hi = std::log(1e8);
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  for (int it = 0; it < 300 && hi - lo > 1e-14; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = objective(x2);
    }
  }
  const double scale = std::exp(0.5 * (lo + hi));
  StorageMatrix out;
  out.p = scale * p0;
  out.dissipation_max_eigenvalue = DissipationMaxEigenvalue(block, out.p);
  return out;
}

LyapunovTraceResult CompositeLyapunovTrace(
    const Trajectory& traj, const Eigen::VectorXd& z_star,
    const Eigen::VectorXd& xi_star, Temperature eps, double gamma,
    const ActionLayout& layout, const Eigen::MatrixXd& p, double tolerance) {
  const int n = layout.total();
  if (z_star.size() != n || xi_star.size() != n || p.rows() != n ||
      p.cols() != n) {
    throw DomainError("composite Lyapunov inputs do not match the layout");
  }
  if ((p - p.transpose()).lpNorm<Eigen::Infinity>() >
      1e-10 * std::max(1.0, p.lpNorm<Eigen::Infinity>())) {
    throw ConfigurationError("storage matrix P is not symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> chol(p);
  if (chol.info() != Eigen::Success) {
    throw ConfigurationError("storage matrix P is not positive definite");
  }
  RequireScoreStates(traj, 2 * n);
  std::vector<double> values;
  values.reserve(traj.states.size());
  for (const Eigen::VectorXd& s : traj.states) {
    const Eigen::VectorXd dxi = s.segment(n, n) - xi_star;
    values.push_back(BregmanLse(s.head(n), z_star, eps, layout) +
                     0.5 * gamma * dxi.dot(p * dxi));
  }
  return MonotonicityVerdict(std::move(values), tolerance);
}

}  // namespace gamedyn
