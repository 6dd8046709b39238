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

#ifndef GAMEDYN_CLASSIFY_H_
#define GAMEDYN_CLASSIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "gamedyn/game.h"

namespace gamedyn {

enum class MonotonicityClass {
  kStrictlyMonotone,
  kNullMonotone,
  kHypoMonotone,
};

std::string ClassName(MonotonicityClass c);

struct ClassificationReport {
  // Spectrum of Phi + Phi^T, ascending. Empty for sampled estimates.
  std::vector<double> full_eigenvalues;
  // Eigenvalues of Phi + Phi^T whose eigenspace meets the tangent space,
  // repeated by the dimension of that intersection. When no eigenspace meets
  // the tangent space this is the compressed spectrum instead.
  std::vector<double> tangent_eigenvalues;
  // Spectrum of E^T (Phi + Phi^T) E.
  std::vector<double> compressed_eigenvalues;
  double lambda_max = 0.0;  // max of tangent_eigenvalues
  double mu = 0.0;          // max(0, lambda_max / 2)
  // max(0, max(compressed_eigenvalues) / 2). This one bounds
  // -(y^T Phi y) / |y|^2 over every tangent y, so it is the modulus that
  // certifies hypo-monotonicity.
  double mu_certified = 0.0;
  MonotonicityClass monotonicity = MonotonicityClass::kNullMonotone;
  bool exact = true;
};

struct ClassifyOptions {
  double class_tolerance = 1e-9;
  // Eigenvalues closer than this are treated as one eigenspace.
  double grouping_tolerance = 1e-8;
  // Fallback for games without a linear map.
  int sample_count = 200;
  std::uint64_t seed = 0;
};

MonotonicityClass ClassifyLambda(double lambda_max, double tolerance);

ClassificationReport Classify(const GameSpec& game,
                              const ClassifyOptions& options = {});

// Classification of an explicit n x n map on the given layout.
ClassificationReport ClassifyLinearMap(const Eigen::MatrixXd& phi,
                                       const ActionLayout& layout,
                                       const ClassifyOptions& options = {});

}  // namespace gamedyn

#endif  // GAMEDYN_CLASSIFY_H_
