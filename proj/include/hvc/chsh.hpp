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

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "hvc/info.hpp"
#include "hvc/joint.hpp"
#include "hvc/model.hpp"

namespace hvc {

inline constexpr double kLocalBound = 0.75;
inline constexpr double kTsirelson = (2.0 + std::numbers::sqrt2) / 4.0;
inline constexpr int kNumVariants = 8;

/// Variant v = 4s + 2t + r wins when A ^ B == ab ^ sa ^ tb ^ r. Variant 0 is the
/// textbook game A ^ B == ab.
struct ChshVariant {
  int s = 0;
  int t = 0;
  int r = 0;

  static ChshVariant from_index(int v) {
    if (v < 0 || v >= kNumVariants) {
      throw Error(ErrorCode::kInvalidArgument, "CHSH variant must be in 0..7, got " + std::to_string(v));
    }
    return {(v >> 2) & 1, (v >> 1) & 1, v & 1};
  }
  int index() const { return 4 * s + 2 * t + r; }

  std::size_t target(std::size_t a, std::size_t b) const {
    return (a & b) ^ (static_cast<std::size_t>(s) & a) ^ (static_cast<std::size_t>(t) & b) ^
           static_cast<std::size_t>(r);
  }
};

struct ChshReport {
  int variant = 0;
  std::array<std::array<double, 2>, 2> win_probs{};  // [a][b]
  double score = 0.0;
  double ichsh_lhs = 0.0;
  double local_bound = kLocalBound;
  double tsirelson = kTsirelson;
};

namespace detail {

inline void require_binary_settings(std::size_t na, std::size_t nb) {
  if (na != 2 || nb != 2) {
    throw Error(ErrorCode::kUnsupportedShape, "CHSH needs two settings per party");
  }
}

inline void require_uniform_settings(const std::array<std::array<double, 2>, 2>& p_ab) {
  for (const auto& row : p_ab)
    for (double p : row)
      if (std::abs(p - 0.25) > kDefaultTolerance) {
        throw Error(ErrorCode::kWeightedSettings,
                    "CHSH scoring needs uniform, independent setting choices");
      }
}

}  // namespace detail

/// (1/2) J(lambda,X -> B) + (1/2) J(lambda,X -> B^b): the best score an Alice
/// who sees only (a, lambda, X) can reach when settings are free and uniform.
inline double ichsh_lhs(const JointDistribution& joint) {
  const Key lx{Var::lambda, Var::X};
  return 0.5 * guessed_info(joint, lx, Key{Var::B}) +
         0.5 * guessed_info(joint, lx, Key::parity(Var::B, Var::b));
}

inline ChshReport chsh_score(const JointDistribution& joint, int variant = 0) {
  const ChshVariant v = ChshVariant::from_index(variant);
  detail::require_binary_settings(joint.extent(Var::a), joint.extent(Var::b));
  std::array<std::array<double, 2>, 2> p_ab{}, p_win{};
  joint.for_each([&](const Cell& c, double p) {
    const std::size_t a = c[idx(Var::a)], b = c[idx(Var::b)];
    p_ab[a][b] += p;
    if ((c[idx(Var::A)] ^ c[idx(Var::B)]) == v.target(a, b)) p_win[a][b] += p;
  });
  detail::require_uniform_settings(p_ab);

  ChshReport r;
  r.variant = variant;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      r.win_probs[a][b] = p_win[a][b] / p_ab[a][b];
      r.score += 0.25 * r.win_probs[a][b];
    }
  r.ichsh_lhs = ichsh_lhs(joint);
  return r;
}

struct OptimalAliceResult {
  AliceTable strategy;
  ChshReport report;
};

namespace detail {

/// Deterministic max-win strategy for one variant, plus its total win probability.
/// Ties go to A = 0.
struct GreedyAlice {
  std::vector<unsigned char> choice;  // [a][lambda][X]
  double score = 0.0;
};

inline GreedyAlice greedy_alice(const HvcModel& model, const std::vector<double>& up,
                                const ChshVariant& v) {
  const std::size_t nl = model.num_lambda(), nm = model.num_messages();
  GreedyAlice g;
  g.choice.assign(2 * nl * nm, 0);
  std::vector<double> w(2 * nl * nm * 2, 0.0);
  std::size_t off = 0;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const std::size_t tgt = v.target(a, b);
      for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t bo = 0; bo < 2; ++bo)
          for (std::size_t x = 0; x < nm; ++x, ++off) {
            // Alice wins with A = B ^ target.
            w[((a * nl + l) * nm + x) * 2 + (bo ^ tgt)] += up[off];
          }
    }
  for (std::size_t cell = 0; cell < g.choice.size(); ++cell) {
    const double w0 = w[2 * cell], w1 = w[2 * cell + 1];
    const bool one = w1 > w0 + 1e-14;
    g.choice[cell] = one ? 1 : 0;
    g.score += one ? w1 : w0;
  }
  return g;
}

inline std::array<std::array<double, 2>, 2> setting_marginal(const HvcModel& model) {
  std::array<std::array<double, 2>, 2> p{};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t l = 0; l < model.num_lambda(); ++l) p[a][b] += model.setting_weight(a, b, l);
  return p;
}

inline void require_chsh_model(const HvcModel& model) {
  require_binary_settings(model.num_alice_settings(), model.num_bob_settings());
  require_uniform_settings(setting_marginal(model));
}

inline AliceTable to_table(const GreedyAlice& g, std::size_t nl, std::size_t nm) {
  AliceTable t(2, Table2<Row>(nl, std::vector<Row>(nm)));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t l = 0; l < nl; ++l)
      for (std::size_t x = 0; x < nm; ++x) {
        const bool one = g.choice[(a * nl + l) * nm + x] != 0;
        t[a][l][x] = one ? Row{0.0, 1.0} : Row{1.0, 0.0};
      }
  return t;
}

}  // namespace detail

/// Optimal Alice score for one variant, without materializing the joint table.
inline double optimal_chsh_value(const HvcModel& model, int variant) {
  detail::require_chsh_model(model);
  return detail::greedy_alice(model, detail::upstream_weights(model), ChshVariant::from_index(variant))
      .score;
}

struct BestVariant {
  int variant = 0;
  double score = 0.0;
};

/// Max over the eight variants of the optimal-Alice score; ties go to the lowest variant.
inline BestVariant best_optimal_chsh(const HvcModel& model) {
  detail::require_chsh_model(model);
  const std::vector<double> up = detail::upstream_weights(model);
  BestVariant best{0, -1.0};
  for (int v = 0; v < kNumVariants; ++v) {
    const double s = detail::greedy_alice(model, up, ChshVariant::from_index(v)).score;
    if (s > best.score + 1e-15) best = {v, s};
  }
  return best;
}

/// Replaces Alice by the deterministic strategy that maximizes the variant's win
/// probability given (a, lambda, X). Any explicit strategy on `model` is ignored.
inline OptimalAliceResult optimal_alice(const HvcModel& model, int variant = 0) {
  detail::require_chsh_model(model);
  const auto g = detail::greedy_alice(model, detail::upstream_weights(model),
                                      ChshVariant::from_index(variant));
  OptimalAliceResult out;
  out.strategy = detail::to_table(g, model.num_lambda(), model.num_messages());
  out.report = chsh_score(enumerate_joint(model, out.strategy), variant);
  return out;
}

/// Model with Alice fixed: explicit tables are kept, the OPTIMAL sentinel is
/// replaced by the optimal strategy for `variant`.
inline HvcModel resolve_alice(const HvcModel& model, int variant = 0) {
  if (!model.has_optimal_alice()) return model;
  HvcModel out = model;
  out.alice = optimal_alice(model, variant).strategy;
  return out;
}

/// Upper bound on the CHSH left-hand side when the message carries no setting
/// information, as a function of j_B = J(lambda,X -> B).
inline double no_setting_info_bound(double j_B) {
  if (!(j_B >= 0.5 && j_B <= 1.0)) {
    throw Error(ErrorCode::kDomain, "J(lambda,X -> B) must lie in [1/2, 1]");
  }
  return j_B / 2.0 + 1.0 / (4.0 * j_B);
}

}  // namespace hvc
