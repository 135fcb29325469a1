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

#include "test_support.hpp"

namespace hvc {
namespace {

TEST(ChshVariant, IndexRoundTrip) {
  for (int v = 0; v < kNumVariants; ++v) EXPECT_EQ(ChshVariant::from_index(v).index(), v);
  const ChshVariant v0 = ChshVariant::from_index(0);
  EXPECT_EQ(v0.target(1, 1), 1u);
  EXPECT_EQ(v0.target(0, 1), 0u);
  const ChshVariant v7 = ChshVariant::from_index(7);  // ab ^ a ^ b ^ 1
  EXPECT_EQ(v7.target(0, 0), 1u);
  EXPECT_EQ(v7.target(1, 1), 0u);
}

TEST(ChshScore, ToyModelReachesTsirelson) {
  const ChshReport r = chsh_score(enumerate_joint(zoo_get("toy-tsirelson").model));
  EXPECT_NEAR(r.score, kTsirelson, 1e-12);
  EXPECT_NEAR(r.win_probs[1][1], std::numbers::sqrt2 - 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.local_bound, 0.75);
}

TEST(ChshScore, MatchesBruteForce) {
  for (const auto& m : testing::random_models_with_alice(200, 53)) {
    const JointDistribution j = enumerate_joint(m);
    for (int v = 0; v < kNumVariants; ++v) {
      EXPECT_NEAR(chsh_score(j, v).score, testing::brute_force_chsh(j, v), 1e-12);
    }
  }
}

TEST(ChshScore, RejectsWeightedSettings) {
  HvcModel m = zoo_get("lhv-best").model;
  m.alice_settings = FiniteDistribution::from_probs({0.6, 0.4});
  try {
    chsh_score(enumerate_joint(m));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWeightedSettings);
  }
}

TEST(ChshScore, RejectsNonBinarySettings) {
  HvcModel m = zoo_get("lhv-best").model;
  m.bob_settings = FiniteDistribution::uniform(3);
  m.bob_outcome.push_back(m.bob_outcome[0]);
  m.message.push_back(m.message[0]);
  try {
    chsh_score(enumerate_joint(m));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedShape);
  }
}

TEST(OptimalAlice, MatchesExhaustiveStrategySearch) {
  for (const auto& m : testing::random_models(120, Constraint::kNone, 59)) {
    if (2 * m.num_lambda() * m.num_messages() > 12) continue;
    for (int v : {0, 3, 6}) {
      EXPECT_NEAR(optimal_alice(m, v).report.score, testing::brute_force_optimal_chsh(m, v), 1e-12);
      EXPECT_NEAR(optimal_chsh_value(m, v), optimal_alice(m, v).report.score, 1e-12);
    }
  }
}

TEST(OptimalAlice, RecoversToyStrategy) {
  const ZooEntry toy = zoo_get("toy-tsirelson");
  HvcModel opt = toy.model;
  opt.alice = OptimalAlice{};
  const OptimalAliceResult r = optimal_alice(opt, 0);
  EXPECT_NEAR(r.report.score, kTsirelson, 1e-12);
  // A = aX ^ lambda
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t l = 0; l < 2; ++l)
      for (std::size_t x = 0; x < 2; ++x) EXPECT_DOUBLE_EQ(r.strategy[a][l][x][((a & x) ^ l)], 1.0);
}

TEST(OptimalAlice, RecoversMaximalRelayStrategy) {
  const OptimalAliceResult r = optimal_alice(zoo_get("footnote-maximal").model, 0);
  EXPECT_NEAR(r.report.score, 1.0, 1e-12);
  // A = a(X ^ lambda) ^ X on every reachable (lambda, X)
  const JointDistribution j = enumerate_joint(zoo_get("footnote-maximal").model, r.strategy);
  j.for_each([](const Cell& c, double p) {
    if (p <= 0.0) return;
    const std::size_t a = c[0], l = c[2], x = c[4], A = c[5];
    EXPECT_EQ(A, (a & (x ^ l)) ^ x);
  });
}

TEST(OptimalAlice, DominatesExplicitStrategies) {
  for (const auto& m : testing::random_models_with_alice(300, 61)) {
    const JointDistribution j = enumerate_joint(m);
    for (int v = 0; v < kNumVariants; ++v) {
      EXPECT_GE(optimal_chsh_value(m, v), chsh_score(j, v).score - 1e-12);
    }
  }
}

TEST(OptimalAlice, IdentityWithGuessedInformation) {
  // With optimal Alice, P(win | a, lambda, X) is J of the target given (lambda, X);
  // for variant 0, a = 0 targets B and a = 1 targets B ^ b.
  for (const auto& m : testing::random_models(1000, Constraint::kNone, 67)) {
    const JointDistribution j = enumerate_joint(resolve_alice(m, 0));
    EXPECT_NEAR(chsh_score(j, 0).score, ichsh_lhs(j), 1e-12);
  }
}

TEST(OptimalAlice, VariantRelabelingSymmetry) {
  // Flipping b (t bit) or A (r bit) on Bob's side maps variants onto each other, so the
  // best variant score is invariant under relabeling Bob's outcome.
  for (const auto& m : testing::random_models(200, Constraint::kNone, 71)) {
    HvcModel flipped = m;
    for (auto& per_b : flipped.bob_outcome)
      for (auto& row : per_b) std::swap(row[0], row[1]);
    for (auto& per_b : flipped.message) std::swap(per_b[0], per_b[1]);
    for (int v = 0; v < kNumVariants; ++v) {
      EXPECT_NEAR(optimal_chsh_value(m, v), optimal_chsh_value(flipped, v ^ 1), 1e-12);
    }
    EXPECT_NEAR(best_optimal_chsh(m).score, best_optimal_chsh(flipped).score, 1e-12);
  }
}

TEST(OptimalAlice, NoCommunicationStaysLocal) {
  for (const auto& m : testing::random_models(300, Constraint::kNone, 73)) {
    HvcModel silent = m;
    for (auto& per_b : silent.message)
      for (auto& per_B : per_b)
        for (auto& row : per_B) row = {1.0};
    EXPECT_LE(best_optimal_chsh(silent).score, kLocalBound + 1e-12);
  }
}

TEST(OptimalAlice, DeterministicLocalModelsPeakAtThreeQuarters) {
  const auto models = deterministic_local_models();
  ASSERT_EQ(models.size(), 256u);
  double best = 0.0;
  for (const auto& m : models) best = std::max(best, chsh_score(enumerate_joint(m)).score);
  EXPECT_DOUBLE_EQ(best, 0.75);
}

TEST(NoSettingInfoBound, ShapeOnGrid) {
  EXPECT_NEAR(no_setting_info_bound(0.5), 0.75, 1e-12);
  EXPECT_NEAR(no_setting_info_bound(1.0), 0.75, 1e-12);
  for (int i = 0; i <= 10000; ++i) {
    const double j = 0.5 + 0.5 * i / 10000.0;
    EXPECT_LE(no_setting_info_bound(j), 0.75 + 1e-15);
  }
  EXPECT_NEAR(no_setting_info_bound(1.0 / std::numbers::sqrt2), 1.0 / std::numbers::sqrt2, 1e-12);
  EXPECT_THROW(no_setting_info_bound(0.49), Error);
  EXPECT_THROW(no_setting_info_bound(1.01), Error);
}

TEST(NoSettingInfoBound, BoundsSettingBlindModels) {
  for (const auto& m : testing::random_models(500, Constraint::kMessageIndependentOfB, 79)) {
    const JointDistribution j = enumerate_joint(resolve_alice(m, 0));
    const double jB = guessed_info(j, Key{Var::lambda, Var::X}, Key{Var::B});
    EXPECT_LE(ichsh_lhs(j), no_setting_info_bound(std::clamp(jB, 0.5, 1.0)) + 1e-12);
  }
}

}  // namespace
}  // namespace hvc
