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

#ifndef GAMEDYN_CHOICE_MAP_H_
#define GAMEDYN_CHOICE_MAP_H_

#include <Eigen/Dense>

#include "gamedyn/game.h"

namespace gamedyn {

// Temperature of the Gibbs-entropy regularizer. Always positive and finite.
class Temperature {
 public:
  // Throws DomainError unless 0 < epsilon < inf.
  explicit Temperature(double epsilon);
  double value() const { return epsilon_; }

 private:
  double epsilon_;
};

// exp(z_i/eps) / sum_j exp(z_j/eps), evaluated with max subtraction.
Eigen::VectorXd SoftmaxBlock(const Eigen::Ref<const Eigen::VectorXd>& z,
                             Temperature eps);

// Per-player soft-max of a concatenated score vector.
MixedProfile Softmax(const Eigen::VectorXd& z, Temperature eps,
                     const ActionLayout& layout);

// eps * ln sum_j exp(z_j/eps). Its gradient is SoftmaxBlock.
double LogSumExp(const Eigen::Ref<const Eigen::VectorXd>& z, Temperature eps);

// (diag(s) - s s^T) / eps with s = SoftmaxBlock(z, eps).
Eigen::MatrixXd SoftmaxJacobianBlock(const Eigen::Ref<const Eigen::VectorXd>& z,
                                     Temperature eps);

// Block-diagonal Jacobian of Softmax.
Eigen::MatrixXd SoftmaxJacobian(const Eigen::VectorXd& z, Temperature eps,
                                const ActionLayout& layout);

// Sum over players of the Bregman divergence of log-sum-exp between z and
// the reference z_ref. Nonnegative; zero along per-block shifts of z_ref.
double BregmanLse(const Eigen::VectorXd& z, const Eigen::VectorXd& z_ref,
                  Temperature eps, const ActionLayout& layout);

}  // namespace gamedyn

#endif  // GAMEDYN_CHOICE_MAP_H_
