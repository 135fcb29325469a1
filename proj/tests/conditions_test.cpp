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

ConditionProfile profile_of(const std::string& name) { return table1_profile(zoo_get(name).model); }

TEST(Independence, ToyModel) {
  const ConditionProfile p = profile_of("toy-tsirelson");
  EXPECT_FALSE(p.si.holds);
  EXPECT_TRUE(p.oi.holds);
  EXPECT_TRUE(p.freedom.holds);
  EXPECT_NEAR(p.chsh_max, kTsirelson, 1e-12);
}

TEST(Independence, MaximalRelay) {
  const ConditionProfile p = profile_of("footnote-maximal");
  EXPECT_FALSE(p.si.holds);
  EXPECT_NEAR(p.si.max_deviation, 1.0, 1e-12);
  EXPECT_TRUE(p.oi.holds);
  EXPECT_NEAR(p.oi.max_deviation, 0.0, 1e-12);
}

TEST(Independence, RelayKeepsSettingIndependence) {
  const ConditionProfile p = profile_of("setting-outcome-relay");
  EXPECT_TRUE(p.si.holds);
  EXPECT_FALSE(p.oi.holds);
  EXPECT_NEAR(p.chsh_max, 1.0, 1e-12);
  // A still depends on b once B is fixed.
  EXPECT_NEAR(p.setting_given_outcome_deviation, 1.0, 1e-12);
}

TEST(Independence, NoisyCopyBreaksOutcomeIndependence) {
  // Alice copies B with probability 0.9 from a one-bit message; B is a fair coin.
  HvcModel m;
  m.lambda_prior = FiniteDistribution::uniform(1);
  m.bob_outcome.assign(2, std::vector<Row>(1, Row{0.5, 0.5}));
  m.message.assign(2, Table2<Row>(2, std::vector<Row>(1)));
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t bo = 0; bo < 2; ++bo) m.message[b][bo][0] = bo ? Row{0.0, 1.0} : Row{1.0, 0.0};
  m.alice = AliceTable(2, Table2<Row>(1, {Row{0.9, 0.1}, Row{0.1, 0.9}}));
  const JointDistribution j = enumerate_joint(m);
  const IndependenceCheck oi = check_oi(j);
  EXPECT_FALSE(oi.holds);
  EXPECT_NEAR(oi.alice_deviation, 0.8, 1e-12);
  EXPECT_TRUE(check_si(j).holds);
}

TEST(Independence, DeterministicSourceImpliesOutcomeIndependence) {
  // Without a message, outcomes determined by (setting, lambda) never depend on the other outcome.
  for (const auto& m : deterministic_local_models()) {
    const JointDistribution j = enumerate_joint(m);
    EXPECT_TRUE(check_oi(j).holds);
    EXPECT_TRUE(check_si(j).holds);
  }
}

TEST(Independence, SpreadIsZeroForProductKernels) {
  for (const auto& m : testing::random_models(200, Constraint::kNone, 83)) {
    const JointDistribution j = enumerate_joint(resolve_alice(m));
    // Bob never sees a, so his half of SI always holds.
    EXPECT_NEAR(check_si(j).bob_deviation, 0.0, 1e-12);
  }
}

TEST(Freedom, SuperdeterministicModel) {
  const ConditionProfile p = profile_of("superdet-demo");
  EXPECT_FALSE(p.freedom.holds);
  EXPECT_NEAR(p.freedom.i_lambda_settings, 2.0, 1e-12);
  EXPECT_NEAR(p.freedom.j_lambda_settings, 1.0, 1e-12);
  const InfoReport r = info_report(enumerate_joint(zoo_get("superdet-demo").model));
  EXPECT_NEAR(r.j_l_to_b, 1.0, 1e-12);
  EXPECT_NEAR(r.j_l_to_B, 1.0, 1e-12);
  EXPECT_NEAR(r.delta_x_to_b, 0.0, 1e-12);
  EXPECT_NEAR(r.delta_x_to_B, 0.0, 1e-12);
}

TEST(Freedom, NonUniformIndependentPriors) {
  HvcModel m = zoo_get("lhv-best").model;
  m.alice_settings = FiniteDistribution::from_probs({0.7, 0.3});
  const FreedomCheck f = check_freedom(m);
  EXPECT_TRUE(f.holds);
  EXPECT_NEAR(f.j_lambda_settings, 0.35, 1e-12);
}

TEST(ConditionTable, RowsInOrder) {
  const auto& rows = condition_rows();
  ASSERT_EQ(rows.size(), 8u);
  const ViolationPossible expected[] = {ViolationPossible::kNo,      ViolationPossible::kNo,
                                        ViolationPossible::kYes,     ViolationPossible::kYesStar,
                                        ViolationPossible::kNo,      ViolationPossible::kYesStar,
                                        ViolationPossible::kYesDoubleStar, ViolationPossible::kYesDoubleStar};
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(rows[i].number, static_cast<int>(i + 1));
    EXPECT_EQ(rows[i].expected, expected[i]);
  }
  EXPECT_EQ(violation_label(ViolationPossible::kYesDoubleStar), "Yes**");
}

TEST(ConditionTable, MaximalRelayRowValues) {
  const ConditionProfile p = profile_of("footnote-maximal");
  EXPECT_FALSE(condition_row(p, 1).holds);
  EXPECT_FALSE(condition_row(p, 2).holds);
  EXPECT_TRUE(condition_row(p, 3).holds);
  EXPECT_TRUE(condition_row(p, 4).holds);
  EXPECT_NEAR(condition_row(p, 6).value, 0.5, 1e-12);
  EXPECT_FALSE(condition_row(p, 7).holds);
  EXPECT_TRUE(condition_row(p, 8).holds);
}

TEST(ConditionTable, LedgerReproducesPattern) {
  const ConditionLedger l = default_condition_ledger(1000, 2024);
  for (const auto& r : l.rows) EXPECT_TRUE(r.reproduced) << r.number << " " << r.derived << " " << r.evidence;
  EXPECT_TRUE(l.starred_exclusive);
  EXPECT_TRUE(l.double_starred_exclusive);
  EXPECT_TRUE(l.reproduced);
}

TEST(ConditionTable, LedgerDetectsContradictingWitness) {
  // A fabricated violating profile that meets row 1 must turn that row into "Yes".
  ConditionProfile fake = profile_of("toy-tsirelson");
  fake.j_lx_b_is_half = {0.5, true};
  const auto l = build_condition_ledger({{"fake", fake}},
                                     run_property_suite(Constraint::kMessageIndependentOfB, 30, 1),
                                     run_property_suite(Constraint::kOutcomeUninformative, 30, 1));
  EXPECT_EQ(l.rows[0].derived, "Yes");
  EXPECT_FALSE(l.rows[0].reproduced);
  EXPECT_FALSE(l.reproduced);
}

TEST(PropertySuites, ConstrainedFamiliesStayLocal) {
  for (Constraint c : {Constraint::kMessageIndependentOfB, Constraint::kOutcomeUninformative}) {
    const SuiteResult r = run_property_suite(c, 500, 5);
    EXPECT_TRUE(r.bound_holds()) << constraint_name(c) << " " << r.max_score;
    EXPECT_EQ(r.condition_failures, 0u);
  }
}

TEST(PropertySuites, StructuralDeltaBZeroCanViolate) {
  // Row 6: B fixed by lambda leaves room for a violation through setting information.
  const SuiteResult r = run_property_suite(Constraint::kDeltaBZeroStructural, 300, 5);
  EXPECT_EQ(r.condition_failures, 0u);
  EXPECT_GT(r.max_score, kLocalBound);
}

}  // namespace
}  // namespace hvc
