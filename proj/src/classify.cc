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

#include "gamedyn/classify.h"

#include <algorithm>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

namespace gamedyn {
namespace {

std::vector<double> ToSortedVector(const Eigen::VectorXd& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> CompressedSpectrum(const Eigen::MatrixXd& sym,
                                       const Eigen::MatrixXd& e) {
  const Eigen::MatrixXd compressed = e.transpose() * sym * e;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      0.5 * (compressed + compressed.transpose()), Eigen::EigenvaluesOnly);
  return ToSortedVector(solver.eigenvalues());
}

void Finish(ClassificationReport& report, double tolerance) {
  if (report.tangent_eigenvalues.empty()) {
    report.tangent_eigenvalues = report.compressed_eigenvalues;
  }
  report.lambda_max = *std::max_element(report.tangent_eigenvalues.begin(),
                                        report.tangent_eigenvalues.end());
  report.mu = std::max(0.0, report.lambda_max / 2.0);
  const double compressed_max = *std::max_element(
      report.compressed_eigenvalues.begin(),
      report.compressed_eigenvalues.end());
  report.mu_certified = std::max(0.0, compressed_max / 2.0);
  report.monotonicity = ClassifyLambda(report.lambda_max, tolerance);
}

// Random interior profile, uniform on each simplex.
Eigen::VectorXd SampleInterior(const ActionLayout& layout,
                               std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd x(layout.total());
  for (int p = 0; p < layout.players(); ++p) {
    const int o = layout.offset(p);
    double sum = 0.0;
    for (int i = 0; i < layout.count(p); ++i) {
      x[o + i] = expo(rng) + 1e-12;
      sum += x[o + i];
    }
    x.segment(o, layout.count(p)) /= sum;
  }
  return x;
}

}  // namespace

std::string ClassName(MonotonicityClass c) {
  switch (c) {
    case MonotonicityClass::kStrictlyMonotone:
      return "strictly-monotone";
    case MonotonicityClass::kNullMonotone:
      return "null-monotone";
    case MonotonicityClass::kHypoMonotone:
      return "hypo-monotone";
  }
  return "unknown";
}

MonotonicityClass ClassifyLambda(double lambda_max, double tolerance) {
  if (lambda_max < -tolerance) return MonotonicityClass::kStrictlyMonotone;
  if (lambda_max > tolerance) return MonotonicityClass::kHypoMonotone;
  return MonotonicityClass::kNullMonotone;
}

ClassificationReport ClassifyLinearMap(const Eigen::MatrixXd& phi,
                                       const ActionLayout& layout,
                                       const ClassifyOptions& options) {
  const Eigen::MatrixXd sym = phi + phi.transpose();
  const TangentBasis basis = MakeTangentBasis(layout);
  const Eigen::MatrixXd normal = NormalBasis(layout);

  ClassificationReport report;
  report.exact = true;
  report.compressed_eigenvalues = CompressedSpectrum(sym, basis.full);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  report.full_eigenvalues = ToSortedVector(values);

  // Walk groups of (numerically) equal eigenvalues. Within a group of size m
  // with eigenvectors V, the eigenspace meets the tangent space in a subspace
  // of dimension m - rank(N^T V).
  const int n = static_cast<int>(values.size());
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n &&
           values[end] - values[end - 1] <= options.grouping_tolerance) {
      ++end;
    }
    const int m = end - start;
    const Eigen::MatrixXd projected =
        normal.transpose() * vectors.middleCols(start, m);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(projected);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k) {
      if (svd.singularValues()[k] > 1e-8) ++rank;
    }
    const double mean = values.segment(start, m).mean();
    for (int k = 0; k < m - rank; ++k) {
      report.tangent_eigenvalues.push_back(mean);
    }
    start = end;
  }
  std::sort(report.tangent_eigenvalues.begin(),
            report.tangent_eigenvalues.end());
  Finish(report, options.class_tolerance);
  return report;
}

ClassificationReport Classify(const GameSpec& game,
                              const ClassifyOptions& options) {
  if (const auto phi = LinearGameMap(game)) {
    return ClassifyLinearMap(*phi, game.layout(), options);
  }

  // Sampled estimate from the payoff Jacobian at random interior profiles.
  const ActionLayout& layout = game.layout();
  const TangentBasis basis = MakeTangentBasis(layout);
  std::mt19937_64 rng(options.seed);
  ClassificationReport report;
  report.exact = false;
  double worst = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < std::max(1, options.sample_count); ++s) {
    const Eigen::VectorXd x = SampleInterior(layout, rng);
    const Eigen::MatrixXd jac = PayoffJacobian(game, x);
    std::vector<double> spectrum =
        CompressedSpectrum(jac + jac.transpose(), basis.full);
    if (spectrum.back() > worst) {
      worst = spectrum.back();
      report.compressed_eigenvalues = std::move(spectrum);
    }
  }
  Finish(report, options.class_tolerance);
  return report;
}

}  // namespace gamedyn
