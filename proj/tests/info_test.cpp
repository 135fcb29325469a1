// Copyright 2026 The hvc Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

namespace hvc {
namespace {

const Key kLX{Var::lambda, Var::X};

TEST(GuessedInfo, ToyModelValues) {
  const JointDistribution j = enumerate_joint(zoo_get("toy-tsirelson").model);
  const double r = 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(guessed_info(j, kLX, Key{Var::b}), r, 1e-12);
  EXPECT_NEAR(guessed_info(j, kLX, Key{Var::B}), 1.0, 1e-12);
  EXPECT_NEAR(guessed_info(j, kLX, Key::parity(Var::B, Var::b)), r, 1e-12);
  EXPECT_NEAR(guessed_info(j, Key{Var::lambda}, Key{Var::b}), 0.5, 1e-12);
  EXPECT_NEAR(transmitted_info(j, {Var::X}, {Var::lambda}, Key{Var::B}), 0.0, 1e-12);
  EXPECT_NEAR(transmitted_info(j, {Var::X}, {Var::lambda}, Key{Var::b}), r - 0.5, 1e-12);
}

TEST(GuessedInfo, EmptySource) {
  const JointDistribution j = enumerate_joint(zoo_get("lhv-best").model);
  try {
    guessed_info(j, Key{}, Key{Var::b});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySource);
  }
}

TEST(GuessedInfo, ParsedKeys) {
  const JointDistribution j = enumerate_joint(zoo_get("toy-tsirelson").model);
  EXPECT_DOUBLE_EQ(guessed_info(j, Key::parse("lambda,X"), Key::parse("B^b")),
                   guessed_info(j, kLX, Key::parity(Var::B, Var::b)));
  EXPECT_THROW(Key::parse("lambda,Q"), Error);
}

TEST(GuessedInfo, RangeAndMonotonicity) {
  for (const auto& m : testing::random_models_with_alice(300, 31)) {
    const JointDistribution j = enumerate_joint(m);
    for (Var t : {Var::b, Var::B, Var::A}) {
      const double jl = guessed_info(j, Key{Var::lambda}, Key{t});
      const double jlx = guessed_info(j, kLX, Key{t});
      const double jall = guessed_info(j, Key{Var::a, Var::b, Var::lambda, Var::B, Var::X}, Key{t});
      EXPECT_GE(jl, 0.5 - 1e-12);
      EXPECT_LE(jall, 1.0 + 1e-12);
      EXPECT_GE(jlx, jl - 1e-12);
      EXPECT_GE(jall, jlx - 1e-12);
    }
  }
}

TEST(GuessedInfo, TransmittedIsExactDifference) {
  for (const auto& m : testing::random_models_with_alice(200, 37)) {
    const InfoReport r = info_report(enumerate_joint(m));
    EXPECT_EQ(r.delta_x_to_b, r.j_lx_to_b - r.j_l_to_b);
    EXPECT_EQ(r.delta_x_to_B, r.j_lx_to_B - r.j_l_to_B);
    EXPECT_GE(r.delta_x_to_b, -1e-12);
    EXPECT_GE(r.delta_x_to_B, -1e-12);
  }
}

TEST(Entropy, ToyModelMessage) {
  const JointDistribution j = enumerate_joint(zoo_get("toy-tsirelson").model);
  EXPECT_NEAR(entropy(j, Key{Var::X}), testing::kToyMessageEntropy, 1e-12);
  EXPECT_NEAR(entropy(j, Key{Var::X}), 0.736, 5e-4);
  EXPECT_NEAR(mutual_info(j, Key{Var::X}, Key{Var::b}), testing::kToyMessageSettingMI, 1e-12);
  EXPECT_NEAR(conditional_min_entropy(j, kLX, Key{Var::b}), testing::kToyMinEntropy, 1e-12);
}

TEST(MutualInfo, SymmetricAndBounded) {
  for (const auto& m : testing::random_models_with_alice(200, 41)) {
    const JointDistribution j = enumerate_joint(m);
    const double ixb = mutual_info(j, Key{Var::X}, Key{Var::b});
    EXPECT_NEAR(ixb, mutual_info(j, Key{Var::b}, Key{Var::X}), 1e-12);
    EXPECT_GE(ixb, 0.0);
    EXPECT_LE(ixb, std::min(entropy(j, Key{Var::X}), entropy(j, Key{Var::b})) + 1e-12);
    // I(X:b) = H(X) + H(b) - H(X,b)
    EXPECT_NEAR(ixb, entropy(j, Key{Var::X}) + 1.0 - entropy(j, Key{Var::X, Var::b}), 1e-12);
    EXPECT_NEAR(mutual_info(j, Key{Var::lambda}, Key{Var::a, Var::b}), 0.0, 1e-12);
  }
}

TEST(MinEntropy, ZeroWhenTargetIsDetermined) {
  for (const auto& m : testing::random_models_with_alice(200, 43)) {
    const JointDistribution j = enumerate_joint(m);
    const double jb = guessed_info(j, kLX, Key{Var::b});
    const double h = conditional_min_entropy(j, kLX, Key{Var::b});
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, 1.0 + 1e-12);
    // Jensen: the averaged form never exceeds -log2 of the guessing probability.
    EXPECT_LE(-std::log2(jb), h + 1e-12);
  }
  const JointDistribution fm = enumerate_joint(resolve_alice(zoo_get("footnote-maximal").model));
  EXPECT_NEAR(guessed_info(fm, kLX, Key{Var::b}), 1.0, 1e-12);
  EXPECT_NEAR(conditional_min_entropy(fm, kLX, Key{Var::b}), 0.0, 1e-12);
}

TEST(ProductBound, FailsWithoutCommunication) {
  // B = 0 for b = 0 and a fair coin for b = 1; nothing is sent.
  HvcModel m;
  m.bob_outcome = {{Row{1.0, 0.0}}, {Row{0.5, 0.5}}};
  m.message = {{{Row{1.0}}, {Row{1.0}}}, {{Row{1.0}}, {Row{1.0}}}};
  const JointDistribution j = enumerate_joint(resolve_alice(m));
  const ProductBound p = product_bound_check(j);
  EXPECT_NEAR(p.lhs, 0.5, 1e-15);
  EXPECT_NEAR(p.rhs, 0.5625, 1e-15);
  EXPECT_FALSE(p.holds);
  // Still local: (lambda, X) hides b, and the score stays at the bound.
  EXPECT_NEAR(best_optimal_chsh(m).score, 0.75, 1e-12);
}

TEST(ProductBound, AdditiveFormHoldsOnRandomModels) {
  const Key lx{Var::lambda, Var::X};
  for (const auto& m : testing::random_models(1000, Constraint::kNone, 47)) {
    const JointDistribution j = enumerate_joint(resolve_alice(m));
    const double jb = guessed_info(j, lx, Key{Var::b});
    const double jB = guessed_info(j, lx, Key{Var::B});
    const double jx = guessed_info(j, lx, Key::parity(Var::B, Var::b));
    EXPECT_GE(jb, jB + jx - 1.0 - 1e-12);
  }
}

TEST(ProductBound, HoldsWhenSettingIsHiddenFromOutcome) {
  for (const auto& m : testing::random_models(1000, Constraint::kMessageIndependentOfB, 53)) {
    const ProductBound p = product_bound_check(enumerate_joint(resolve_alice(m)));
    EXPECT_TRUE(p.holds) << p.lhs << " < " << p.rhs;
  }
}

TEST(ProductBound, TightOnMaximalRelay) {
  const ProductBound p = product_bound_check(enumerate_joint(resolve_alice(zoo_get("footnote-maximal").model)));
  EXPECT_NEAR(p.lhs, 1.0, 1e-12);
  EXPECT_NEAR(p.rhs, 1.0, 1e-12);
}

TEST(Key, ParityNeedsBits) {
  HvcModel m = zoo_get("setting-outcome-relay").model;
  const JointDistribution j = enumerate_joint(m);
  EXPECT_THROW(guessed_info(j, Key{Var::lambda}, Key::parity(Var::X, Var::b)), Error);
}

}  // namespace
}  // namespace hvc
