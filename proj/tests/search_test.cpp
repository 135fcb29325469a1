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

SearchConfig small_config(Constraint c) {
  SearchConfig cfg;
  cfg.constraint = c;
  cfg.restarts = 8;
  cfg.steps_per_restart = 300;
  cfg.seed = 17;
  cfg.validate_candidates = true;
  return cfg;
}

TEST(RandomModel, Valid) {
  Rng rng = make_stream(1, 0);
  for (Constraint c : {Constraint::kNone, Constraint::kMessageIndependentOfB, Constraint::kOutcomeUninformative,
                       Constraint::kDeltaBZeroStructural}) {
    for (std::size_t nl = 1; nl <= 3; ++nl)
      for (std::size_t nm = 1; nm <= 4; ++nm) {
        const HvcModel m = random_model(nl, nm, c, rng);
        EXPECT_TRUE(validate_model(m).empty()) << constraint_name(c);
        EXPECT_EQ(m.num_lambda(), nl);
        EXPECT_EQ(m.num_messages(), nm);
        EXPECT_TRUE(m.has_optimal_alice());
      }
  }
  EXPECT_THROW(random_model(0, 2, Constraint::kNone, rng), Error);
}

TEST(RandomModel, SettingBlindFamily) {
  for (const auto& m : testing::random_models(300, Constraint::kMessageIndependentOfB, 3)) {
    const JointDistribution j = enumerate_joint(resolve_alice(m));
    EXPECT_NEAR(guessed_info(j, Key{Var::lambda, Var::X}, Key{Var::b}), 0.5, 1e-12);
    EXPECT_NEAR(mutual_info(j, Key{Var::lambda, Var::X, Var::B}, Key{Var::b}), 0.0, 1e-12);
  }
}

TEST(RandomModel, OutcomeBlindFamily) {
  for (const auto& m : testing::random_models(300, Constraint::kOutcomeUninformative, 5)) {
    const JointDistribution j = enumerate_joint(resolve_alice(m));
    EXPECT_NEAR(guessed_info(j, Key{Var::lambda, Var::X}, Key{Var::B}), 0.5, 1e-12);
  }
}

TEST(RandomModel, DeltaBZeroFamily) {
  for (const auto& m : testing::random_models(300, Constraint::kDeltaBZeroStructural, 7)) {
    const InfoReport r = info_report(enumerate_joint(resolve_alice(m)));
    EXPECT_NEAR(r.j_l_to_B, 1.0, 1e-12);
    EXPECT_NEAR(r.delta_x_to_B, 0.0, 1e-12);
  }
}

TEST(HillClimb, DeterministicAcrossThreads) {
  SearchConfig cfg = small_config(Constraint::kNone);
  cfg.threads = 1;
  const SearchResult a = hill_climb(cfg);
  cfg.threads = 4;
  const SearchResult b = hill_climb(cfg);
  EXPECT_EQ(a.best_score, b.best_score);
  EXPECT_EQ(a.trajectory, b.trajectory);
  EXPECT_EQ(a.best_model, b.best_model);
}

TEST(HillClimb, AcceptedScoresAreMonotone) {
  const SearchResult r = hill_climb(small_config(Constraint::kNone));
  ASSERT_EQ(r.accepted.size(), 8u);
  for (const auto& seq : r.accepted)
    for (std::size_t i = 1; i < seq.size(); ++i) EXPECT_GT(seq[i], seq[i - 1]);
  for (std::size_t i = 0; i < r.trajectory.size(); ++i) EXPECT_EQ(r.trajectory[i], r.accepted[i].back());
}

TEST(HillClimb, ReportedScoreMatchesEngine) {
  const SearchResult r = hill_climb(small_config(Constraint::kNone));
  EXPECT_NEAR(best_optimal_chsh(r.best_model).score, r.best_score, 1e-12);
  EXPECT_NEAR(r.profile.chsh_max, r.best_score, 1e-12);
  EXPECT_EQ(r.best_score, *std::max_element(r.trajectory.begin(), r.trajectory.end()));
  // Lowest restart index wins ties.
  for (std::size_t i = 0; i < r.best_restart; ++i) EXPECT_LT(r.trajectory[i], r.best_score);
}

TEST(HillClimb, RecoversAlgebraicMaximum) {
  SearchConfig cfg;  // L = M = 2, 50 restarts x 2000 steps
  const SearchResult r = hill_climb(cfg);
  EXPECT_GE(r.best_score, 0.99);
}

TEST(HillClimb, ConstrainedSearchesStayLocal) {
  for (Constraint c : {Constraint::kMessageIndependentOfB, Constraint::kOutcomeUninformative}) {
    const SearchResult r = hill_climb(small_config(c));
    EXPECT_LE(r.best_score, kLocalBound + 1e-9) << constraint_name(c);
  }
}

TEST(HillClimb, RejectsBadConfig) {
  SearchConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(hill_climb(cfg), Error);
  cfg = SearchConfig{};
  cfg.step_size = 0.0;
  EXPECT_THROW(hill_climb(cfg), Error);
}

TEST(Constraint, NamesRoundTrip) {
  for (Constraint c : {Constraint::kNone, Constraint::kMessageIndependentOfB, Constraint::kOutcomeUninformative,
                       Constraint::kDeltaBZeroStructural}) {
    EXPECT_EQ(parse_constraint(constraint_name(c)), c);
  }
  EXPECT_THROW(parse_constraint("bogus"), Error);
}

}  // namespace
}  // namespace hvc
