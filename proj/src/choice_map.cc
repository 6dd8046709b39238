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

#include "gamedyn/choice_map.h"

#include <cmath>
#include <string>

#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

void RequireFinite(const Eigen::Ref<const Eigen::VectorXd>& z,
                   const char* where) {
  if (!z.allFinite()) {
    throw DomainError(std::string(where) + ": non-finite score entry");
  }
}

void RequireLength(const Eigen::VectorXd& z, const ActionLayout& layout) {
  if (z.size() != layout.total()) {
    throw DomainError("score vector length " + std::to_string(z.size()) +
                      " does not match " + std::to_string(layout.total()) +
                      " actions");
  }
}

}  // namespace

Temperature::Temperature(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("temperature must be positive and finite");
  }
}

Eigen::VectorXd SoftmaxBlock(const Eigen::Ref<const Eigen::VectorXd>& z,
                             Temperature eps) {
  RequireFinite(z, "SoftmaxBlock");
  Eigen::VectorXd w = ((z.array() - z.maxCoeff()) / eps.value()).exp();
  return w / w.sum();
}

MixedProfile Softmax(const Eigen::VectorXd& z, Temperature eps,
                     const ActionLayout& layout) {
  RequireLength(z, layout);
  Eigen::VectorXd x(z.size());
  for (int p = 0; p < layout.players(); ++p) {
    x.segment(layout.offset(p), layout.count(p)) =
        SoftmaxBlock(z.segment(layout.offset(p), layout.count(p)), eps);
  }
  return MixedProfile(std::move(x), layout);
}

double LogSumExp(const Eigen::Ref<const Eigen::VectorXd>& z, Temperature eps) {
  RequireFinite(z, "LogSumExp");
  const double top = z.maxCoeff();
  return top +
         eps.value() * std::log(((z.array() - top) / eps.value()).exp().sum());
}

Eigen::MatrixXd SoftmaxJacobianBlock(const Eigen::Ref<const Eigen::VectorXd>& z,
                                     Temperature eps) {
  const Eigen::VectorXd s = SoftmaxBlock(z, eps);
  Eigen::MatrixXd jac = -s * s.transpose();
  jac.diagonal() += s;
  return jac / eps.value();
}

Eigen::MatrixXd SoftmaxJacobian(const Eigen::VectorXd& z, Temperature eps,
                                const ActionLayout& layout) {
  RequireLength(z, layout);
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(z.size(), z.size());
  for (int p = 0; p < layout.players(); ++p) {
    const int o = layout.offset(p);
    const int m = layout.count(p);
    jac.block(o, o, m, m) = SoftmaxJacobianBlock(z.segment(o, m), eps);
  }
  return jac;
}

double BregmanLse(const Eigen::VectorXd& z, const Eigen::VectorXd& z_ref,
                  Temperature eps, const ActionLayout& layout) {
  RequireLength(z, layout);
  RequireLength(z_ref, layout);
  double total = 0.0;
  for (int p = 0; p < layout.players(); ++p) {
    const auto zp = z.segment(layout.offset(p), layout.count(p));
    const auto rp = z_ref.segment(layout.offset(p), layout.count(p));
    total += LogSumExp(zp, eps) - LogSumExp(rp, eps) -
             SoftmaxBlock(rp, eps).dot(zp - rp);
  }
  // Convexity makes the exact value nonnegative; only rounding goes below.
  return std::max(total, 0.0);
}

}  // namespace gamedyn
