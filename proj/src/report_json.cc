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

#include "gamedyn/report_json.h"

#include <cmath>

namespace gamedyn {
namespace {

// JSON has no NaN; missing values become null.
nlohmann::json Number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

nlohmann::json VectorToJson(const Eigen::VectorXd& v) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(Number(v[i]));
  return out;
}

nlohmann::json ToJson(const ClassificationReport& report) {
  return {
      {"eigenvalues", report.tangent_eigenvalues},
      {"full_eigenvalues", report.full_eigenvalues},
      {"compressed_eigenvalues", report.compressed_eigenvalues},
      {"lambda_max", report.lambda_max},
      {"mu", report.mu},
      {"mu_certified", report.mu_certified},
      {"class", ClassName(report.monotonicity)},
      {"exact", report.exact},
  };
}

nlohmann::json ToJson(const RestPointResult& result) {
  return {
      {"found", result.found},
      {"z", VectorToJson(result.z)},
      {"x", VectorToJson(result.x)},
      {"residual", Number(result.residual)},
      {"iterations", result.iterations},
      {"method", result.method},
  };
}

nlohmann::json ToJson(const BifurcationResult& result) {
  nlohmann::json out = {
      {"status", result.status},
      {"iterations", result.iterations},
      {"bracket", {result.bracket_low, result.bracket_high}},
      {"abscissa", {Number(result.abscissa_low), Number(result.abscissa_high)}},
  };
  out["eps_star"] =
      result.status == "found" ? nlohmann::json(result.eps_star) : nullptr;
  return out;
}

nlohmann::json ToJson(const ConvergenceReport& report) {
  return {
      {"status", StatusName(report.status)},
      {"amplitude", Number(report.amplitude)},
      {"drift", Number(report.drift)},
      {"terminal_distance", Number(report.terminal_distance)},
      {"terminal_x", VectorToJson(report.terminal_x)},
  };
}

nlohmann::json ToJson(const FeedbackBlockReport& report) {
  return {
      {"hurwitz", report.hurwitz},
      {"spectral_abscissa", Number(report.spectral_abscissa)},
      {"zero_dc_gain", report.zero_dc_gain},
      {"dc_gain_norm", Number(report.dc_gain_norm)},
      {"grid_positive_real", report.grid_positive_real},
      {"min_hermitian_eigenvalue", Number(report.min_hermitian_eigenvalue)},
      {"worst_frequency", Number(report.worst_frequency)},
      {"passed", report.passed()},
  };
}

}  // namespace gamedyn
