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
#include <complex>

#include "doctest.h"
#include "gamedyn/errors.h"

namespace gamedyn {
namespace {

TEST_CASE("high-pass block passes every check") {
  const ActionLayout layout({3});
  const FeedbackBlock block = FeedbackBlock::HighPass(layout, 1.0, 1.0);
  const FeedbackBlockReport report = VerifyFeedbackBlock(block);
  CHECK(report.hurwitz);
  CHECK(report.spectral_abscissa == doctest::Approx(-1.0));
  CHECK(report.zero_dc_gain);
  CHECK(report.dc_gain_norm <= 1e-10);
  CHECK(report.grid_positive_real);
  // Re(K j w / (j w + a)) = K w^2 / (w^2 + a^2), smallest at the grid's low
  // end.
  CHECK(report.min_hermitian_eigenvalue ==
        doctest::Approx(1e-6 / (1e-6 + 1.0)).epsilon(1e-9));
  CHECK(report.worst_frequency == doctest::Approx(1e-3));
  CHECK(report.passed());
}

TEST_CASE("transfer matrix of the high-pass block") {
  const ActionLayout layout({2, 2});
  const double k = 2.0, a = 0.5;
  const FeedbackBlock block = FeedbackBlock::HighPass(layout, k, a);
  for (double w : {0.01, 0.3, 1.0, 40.0}) {
    const std::complex<double> s(0.0, w);
    const std::complex<double> expected = k * s / (s + a);
    const Eigen::MatrixXcd h = TransferMatrix(block, s);
    CHECK(std::abs(h(0, 0) - expected) < 1e-12);
    CHECK(std::abs(h(3, 3) - expected) < 1e-12);
    CHECK(std::abs(h(0, 1)) < 1e-14);
  }
}

TEST_CASE("non-Hurwitz A fails") {
  const ActionLayout layout({2});
  FeedbackBlock block = FeedbackBlock::HighPass(layout, 1.0, 1.0);
  block.a = Eigen::MatrixXd::Identity(2, 2);
  const FeedbackBlockReport report = VerifyFeedbackBlock(block);
  CHECK_FALSE(report.hurwitz);
  CHECK_FALSE(report.passed());
}

TEST_CASE("nonzero DC gain fails") {
  const ActionLayout layout({2});
  FeedbackBlock block = FeedbackBlock::HighPass(layout, 1.0, 1.0);
  block.d.setZero();
  const FeedbackBlockReport report = VerifyFeedbackBlock(block);
  CHECK(report.hurwitz);
  CHECK_FALSE(report.zero_dc_gain);
  CHECK(report.dc_gain_norm == doctest::Approx(1.0));
  CHECK_FALSE(report.passed());
}

TEST_CASE("a block that is not positive real on the grid fails") {
  const ActionLayout layout({2});
  FeedbackBlock block = FeedbackBlock::HighPass(layout, 1.0, 1.0);
  block.c = -block.c;
  block.d = -block.d;
  const FeedbackBlockReport report = VerifyFeedbackBlock(block);
  CHECK(report.zero_dc_gain);
  CHECK_FALSE(report.grid_positive_real);
}

TEST_CASE("invalid configurations") {
  const ActionLayout layout({2});
  FeedbackBlock singular = FeedbackBlock::HighPass(layout, 1.0, 1.0);
  singular.a.setZero();
  CHECK_THROWS_AS(VerifyFeedbackBlock(singular), ConfigurationError);
  FeedbackBlock ragged = FeedbackBlock::HighPass(layout, 1.0, 1.0);
  ragged.b = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(VerifyFeedbackBlock(ragged), ConfigurationError);
  CHECK_THROWS_AS(FeedbackBlock::HighPass(layout, 0.0, 1.0),
                  ConfigurationError);
  CHECK_THROWS_AS(VerifyFeedbackBlock(FeedbackBlock::HighPass(layout, 1, 1),
                                      FrequencyGrid{1.0, 0.1, 10}),
                  ConfigurationError);
}

TEST_CASE("per-player blocks are placed on the diagonal") {
  const ActionLayout layout({2, 3});
  const FeedbackBlock p1 = FeedbackBlock::HighPass(ActionLayout({2}), 1, 2);
  const FeedbackBlock p2 = FeedbackBlock::HighPass(ActionLayout({3}), 3, 4);
  const FeedbackBlock full = FeedbackBlock::FromPlayerBlocks(layout, {p1, p2});
  CHECK(full.size() == 5);
  CHECK(full.a(0, 0) == -2.0);
  CHECK(full.a(4, 4) == -4.0);
  CHECK(full.c(3, 3) == 3.0);
  CHECK(full.a(0, 3) == 0.0);
  CHECK(VerifyFeedbackBlock(full).passed());
  CHECK_THROWS_AS(FeedbackBlock::FromPlayerBlocks(layout, {p2, p1}),
                  ConfigurationError);
  CHECK_THROWS_AS(FeedbackBlock::FromPlayerBlocks(layout, {p1}),
                  ConfigurationError);
}

}  // namespace
}  // namespace gamedyn
