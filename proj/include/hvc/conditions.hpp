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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hvc/chsh.hpp"
#include "hvc/info.hpp"
#include "hvc/joint.hpp"
#include "hvc/model.hpp"

namespace hvc {

struct IndependenceCheck {
  bool holds = true;
  double max_deviation = 0.0;
  double alice_deviation = 0.0;
  double bob_deviation = 0.0;
};

/// Largest change of P(target | context, varying) as `varying` moves over its
/// positive-mass values, maximized over contexts and target values.
inline double conditional_spread(const JointDistribution& joint, Var target,
                                 const std::vector<Var>& context, Var varying) {
  std::vector<Var> vars = context;
  vars.push_back(varying);
  vars.push_back(target);
  const MarginalTable t = marginal_table(joint, vars);
  const std::size_t nt = joint.extent(target);
  const std::size_t nv = joint.extent(varying);
  const std::size_t nctx = t.values.size() / (nt * nv);

  double spread = 0.0;
  std::vector<double> lo(nt), hi(nt);
  for (std::size_t c = 0; c < nctx; ++c) {
    std::fill(lo.begin(), lo.end(), 2.0);
    std::fill(hi.begin(), hi.end(), -1.0);
    for (std::size_t v = 0; v < nv; ++v) {
      const double* row = &t.values[(c * nv + v) * nt];
      double mass = 0.0;
      for (std::size_t k = 0; k < nt; ++k) mass += row[k];
      if (!(mass > 0.0)) continue;
      for (std::size_t k = 0; k < nt; ++k) {
        const double p = row[k] / mass;
        lo[k] = std::min(lo[k], p);
        hi[k] = std::max(hi[k], p);
      }
    }
    for (std::size_t k = 0; k < nt; ++k) {
      if (hi[k] >= lo[k]) spread = std::max(spread, hi[k] - lo[k]);
    }
  }
  return spread;
}

/// Setting independence: P(A|a,b,lambda) = P(A|a,lambda) and P(B|a,b,lambda) = P(B|b,lambda).
inline IndependenceCheck check_si(const JointDistribution& joint, double tol = kDefaultTolerance) {
  IndependenceCheck r;
  r.alice_deviation = conditional_spread(joint, Var::A, {Var::a, Var::lambda}, Var::b);
  r.bob_deviation = conditional_spread(joint, Var::B, {Var::b, Var::lambda}, Var::a);
  r.max_deviation = std::max(r.alice_deviation, r.bob_deviation);
  r.holds = r.max_deviation <= tol;
  return r;
}

/// Outcome independence: P(A|a,b,B,lambda) = P(A|a,b,lambda) and likewise for B.
inline IndependenceCheck check_oi(const JointDistribution& joint, double tol = kDefaultTolerance) {
  IndependenceCheck r;
  r.alice_deviation = conditional_spread(joint, Var::A, {Var::a, Var::b, Var::lambda}, Var::B);
  r.bob_deviation = conditional_spread(joint, Var::B, {Var::a, Var::b, Var::lambda}, Var::A);
  r.max_deviation = std::max(r.alice_deviation, r.bob_deviation);
  r.holds = r.max_deviation <= tol;
  return r;
}

/// Dependence of P(A|a,b,B,lambda) on b. Setting independence does not force this to vanish.
inline double setting_given_outcome_deviation(const JointDistribution& joint) {
  return conditional_spread(joint, Var::A, {Var::a, Var::B, Var::lambda}, Var::b);
}

struct FreedomCheck {
  bool holds = true;
  double i_lambda_settings = 0.0;  // bits
  double j_lambda_settings = 0.0;
};

/// Independence of the settings from lambda: I(lambda : a,b) = 0 and
/// J(lambda -> a,b) = max P(a,b) (1/4 for uniform settings).
inline FreedomCheck check_freedom(const HvcModel& model) {
  const Shape shape = detail::model_shape(model);
  const std::vector<double> up = detail::upstream_weights(model);
  std::vector<double> values(up.size() * 2, 0.0);
  for (std::size_t i = 0; i < up.size(); ++i) values[2 * i] = up[i];
  const JointDistribution joint(shape, std::move(values));

  const Key settings{Var::a, Var::b};
  FreedomCheck r;
  r.i_lambda_settings = mutual_info(joint, Key{Var::lambda}, settings);
  r.j_lambda_settings = guessed_info(joint, Key{Var::lambda}, settings);
  const FiniteDistribution p_ab = marginalize(joint, {Var::a, Var::b});
  const double best_blind = *std::max_element(p_ab.probs.begin(), p_ab.probs.end());
  r.holds = r.i_lambda_settings <= 1e-12 &&
            std::abs(r.j_lambda_settings - best_blind) <= kDefaultTolerance;
  return r;
}

struct ConditionFlag {
  double value = 0.0;
  bool holds = false;
};

/// Every condition of the setting/outcome information ledger for one model.
struct ConditionProfile {
  ConditionFlag j_lx_b_is_half;
  ConditionFlag j_lx_B_is_half;
  ConditionFlag j_l_b_is_half;
  ConditionFlag j_l_B_is_half;
  ConditionFlag delta_b_is_zero;
  ConditionFlag delta_B_is_zero;
  IndependenceCheck si;
  IndependenceCheck oi;
  FreedomCheck freedom;
  double setting_given_outcome_deviation = 0.0;
  double chsh_max = 0.0;
  int chsh_max_variant = 0;

  bool violates_chsh() const { return chsh_max > kLocalBound + kDefaultTolerance; }
};

inline ConditionProfile table1_profile(const HvcModel& model, double tol = kDefaultTolerance) {
  ConditionProfile p;
  const BestVariant best = best_optimal_chsh(model);
  p.chsh_max = best.score;
  p.chsh_max_variant = best.variant;

  const HvcModel resolved = resolve_alice(model, best.variant);
  const JointDistribution joint = enumerate_joint(resolved);
  const InfoReport info = info_report(joint);
  const auto flag = [tol](double value, double target) {
    return ConditionFlag{value, std::abs(value - target) <= tol};
  };
  p.j_lx_b_is_half = flag(info.j_lx_to_b, 0.5);
  p.j_lx_B_is_half = flag(info.j_lx_to_B, 0.5);
  p.j_l_b_is_half = flag(info.j_l_to_b, 0.5);
  p.j_l_B_is_half = flag(info.j_l_to_B, 0.5);
  p.delta_b_is_zero = flag(info.delta_x_to_b, 0.0);
  p.delta_B_is_zero = flag(info.delta_x_to_B, 0.0);
  p.si = check_si(joint, tol);
  p.oi = check_oi(joint, tol);
  p.freedom = check_freedom(model);
  p.setting_given_outcome_deviation = hvc::setting_given_outcome_deviation(joint);
  return p;
}

enum class ViolationPossible { kNo, kYes, kYesStar, kYesDoubleStar };

inline std::string_view violation_label(ViolationPossible v) {
  switch (v) {
    case ViolationPossible::kNo: return "No";
    case ViolationPossible::kYes: return "Yes";
    case ViolationPossible::kYesStar: return "Yes*";
    case ViolationPossible::kYesDoubleStar: return "Yes**";
  }
  return "?";
}

struct ConditionRow {
  int number = 0;
  std::string_view condition;
  ViolationPossible expected = ViolationPossible::kNo;
};

inline const std::array<ConditionRow, 8>& condition_rows() {
  static const std::array<ConditionRow, 8> rows = {{
      {1, "J(lambda,X->b)=1/2", ViolationPossible::kNo},
      {2, "J(lambda,X->B)=1/2", ViolationPossible::kNo},
      {3, "J(lambda->b)=1/2", ViolationPossible::kYes},
      {4, "J(lambda->B)=1/2", ViolationPossible::kYesStar},
      {5, "Delta_lambda(X->b)=0", ViolationPossible::kNo},
      {6, "Delta_lambda(X->B)=0", ViolationPossible::kYesStar},
      {7, "SI: P(A|a,b,lambda)=P(A|a,lambda)", ViolationPossible::kYesDoubleStar},
      {8, "OI: P(A|a,b,B,lambda)=P(A|a,b,lambda)", ViolationPossible::kYesDoubleStar},
  }};
  return rows;
}

/// (value, satisfied) of row `number` (1..8). SI/OI rows report the max deviation.
inline ConditionFlag condition_row(const ConditionProfile& p, int number) {
  switch (number) {
    case 1: return p.j_lx_b_is_half;
    case 2: return p.j_lx_B_is_half;
    case 3: return p.j_l_b_is_half;
    case 4: return p.j_l_B_is_half;
    case 5: return p.delta_b_is_zero;
    case 6: return p.delta_B_is_zero;
    case 7: return {p.si.max_deviation, p.si.holds};
    case 8: return {p.oi.max_deviation, p.oi.holds};
  }
  throw Error(ErrorCode::kInvalidArgument, "table rows are numbered 1..8");
}

}  // namespace hvc
