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
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hvc/chsh.hpp"
#include "hvc/error.hpp"
#include "hvc/model.hpp"

namespace hvc {

/// A reference value a zoo model must reproduce. `quantity` names an evaluation
/// field (see evaluate.hpp); booleans are encoded as 1 / 0.
struct Expectation {
  std::string quantity;
  double value = 0.0;
  double tolerance = 1e-12;
  std::string note;
};

struct ZooEntry {
  std::string name;
  std::string description;
  HvcModel model;
  std::vector<Expectation> expected;
};

namespace zoo_detail {

inline Row bit(std::size_t v) { return v ? Row{0.0, 1.0} : Row{1.0, 0.0}; }

inline Row point(std::size_t n, std::size_t k) {
  Row r(n, 0.0);
  r[k] = 1.0;
  return r;
}

/// Fills the kernel tables with deterministic functions.
template <typename OutcomeFn, typename MessageFn>
void deterministic_bob(HvcModel& m, std::size_t nm, OutcomeFn outcome, MessageFn message) {
  const std::size_t nl = m.num_lambda();
  m.bob_outcome.assign(2, std::vector<Row>(nl));
  m.message.assign(2, Table2<Row>(2, std::vector<Row>(nl)));
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t l = 0; l < nl; ++l) {
      m.bob_outcome[b][l] = bit(outcome(b, l));
      for (std::size_t bo = 0; bo < 2; ++bo) m.message[b][bo][l] = point(nm, message(b, bo, l));
    }
}

template <typename AliceFn>
AliceTable deterministic_alice(std::size_t nl, std::size_t nm, AliceFn f) {
  AliceTable t(2, Table2<Row>(nl, std::vector<Row>(nm)));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t l = 0; l < nl; ++l)
      for (std::size_t x = 0; x < nm; ++x) t[a][l][x] = bit(f(a, l, x));
  return t;
}

}  // namespace zoo_detail

/// lambda is a fair bit and B = lambda. Bob sends X = 0 for b = 0 and X = 1 with
/// probability sqrt(2) - 1 for b = 1; Alice answers A = aX ^ lambda.
inline ZooEntry zoo_toy_tsirelson() {
  using namespace zoo_detail;
  const double p = std::numbers::sqrt2 - 1.0;
  HvcModel m;
  m.name = "toy-tsirelson";
  m.notes = "B = lambda; X = 1 w.p. sqrt(2)-1 only when b = 1; A = aX ^ lambda";
  m.lambda_prior = FiniteDistribution::uniform(2);
  m.bob_outcome.assign(2, std::vector<Row>(2));
  m.message.assign(2, Table2<Row>(2, std::vector<Row>(2)));
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t l = 0; l < 2; ++l) {
      m.bob_outcome[b][l] = bit(l);
      for (std::size_t bo = 0; bo < 2; ++bo) {
        m.message[b][bo][l] = b == 0 ? Row{1.0, 0.0} : Row{1.0 - p, p};
      }
    }
  m.alice = deterministic_alice(2, 2, [](auto a, auto l, auto x) { return (a & x) ^ l; });

  const double s = std::numbers::sqrt2;
  ZooEntry e{m.name, "one-bit setting message reaching the quantum CHSH maximum", m, {}};
  e.expected = {
      {"chsh_score", kTsirelson, 1e-12, "win probs {1,1,1,sqrt2-1}"},
      {"chsh_max", kTsirelson, 1e-12, "optimal Alice reproduces the explicit table"},
      {"h_X", 0.736, 5e-4, "0.736 bits"},
      {"h_X", 0.73591593803459663, 1e-12, "binary entropy of (sqrt2-1)/2"},
      {"i_X_b", 0.24658589585951688, 1e-12, "H(X) - h(sqrt2-1)/2"},
      {"delta_x_to_B", 0.0, 1e-12, "X is redundant"},
      {"j_l_to_B", 1.0, 1e-12, "B = lambda"},
      {"j_lx_to_B", 1.0, 1e-12, "B = lambda"},
      {"j_lx_to_b", 1.0 / s, 1e-12, "p/2 + 1/2"},
      {"j_lx_to_BxorB", 1.0 / s, 1e-12, "B known, so same as b"},
      {"hmin_b_given_lx", 0.52743137369074128, 1e-12, "(1 - p/2) log2(2 - p)"},
      {"si_holds", 0.0, 0.0, "P(A|a=1,b,lambda) depends on b"},
      {"oi_holds", 1.0, 0.0, "deterministic given (a,lambda,X), B = lambda"},
      {"freedom_holds", 1.0, 0.0, "product prior"},
  };
  return e;
}

/// lambda is a fair bit, B = lambda ^ b, X = B, A = a(X ^ lambda) ^ X. Wins every round.
inline ZooEntry zoo_footnote_maximal() {
  using namespace zoo_detail;
  HvcModel m;
  m.name = "footnote-maximal";
  m.notes = "B = lambda ^ b; X = B; A = a(X ^ lambda) ^ X";
  m.lambda_prior = FiniteDistribution::uniform(2);
  deterministic_bob(
      m, 2, [](auto b, auto l) { return l ^ b; }, [](auto, auto bo, auto) { return bo; });
  m.alice = deterministic_alice(2, 2, [](auto a, auto l, auto x) { return (a & (x ^ l)) ^ x; });

  ZooEntry e{m.name, "outcome relay that carries implicit setting information; algebraic maximum",
             m, {}};
  e.expected = {
      {"chsh_score", 1.0, 1e-12, "A ^ B = ab"},
      {"chsh_max", 1.0, 1e-12, "algebraic maximum"},
      {"j_lx_to_B", 1.0, 1e-12, "B = lambda"},
      {"j_l_to_B", 0.5, 1e-12, "b hides B from lambda"},
      {"delta_x_to_B", 0.5, 1e-12, "X = B"},
      {"j_lx_to_b", 1.0, 1e-12, "b = X ^ lambda"},
      {"oi_holds", 1.0, 0.0, "deterministic"},
      {"si_holds", 0.0, 0.0, "P(A|a=1,lambda) depends on b"},
      {"freedom_holds", 1.0, 0.0, "product prior"},
  };
  return e;
}

/// No hidden variable, no message, both parties always output 0.
inline ZooEntry zoo_lhv_best() {
  using namespace zoo_detail;
  HvcModel m;
  m.name = "lhv-best";
  m.notes = "deterministic local model, A = B = 0, no communication";
  m.lambda_prior = FiniteDistribution::uniform(1);
  deterministic_bob(
      m, 1, [](auto, auto) { return 0; }, [](auto, auto, auto) { return 0; });
  m.alice = deterministic_alice(1, 1, [](auto, auto, auto) { return 0; });

  ZooEntry e{m.name, "deterministic local strategy attaining the local bound", m, {}};
  e.expected = {
      {"chsh_score", 0.75, 0.0, "three of four conditions won"},
      {"chsh_max", 0.75, 1e-12, "local bound"},
      {"si_holds", 1.0, 0.0, "constant outputs"},
      {"oi_holds", 1.0, 0.0, "constant outputs"},
      {"freedom_holds", 1.0, 0.0, "product prior"},
      {"j_lx_to_b", 0.5, 1e-12, "no message"},
  };
  return e;
}

/// lambda = (a, b, mu) with mu a fair bit fixes both settings; B = mu and X = B.
/// Settings are not free: lambda reveals them.
inline ZooEntry zoo_superdet_demo() {
  using namespace zoo_detail;
  HvcModel m;
  m.name = "superdet-demo";
  m.notes = "lambda = 4a + 2b + mu determines the settings; B = mu; X = B (redundant)";
  m.lambda_prior = FiniteDistribution::uniform(8);
  std::vector<Row> coupling(8);
  for (std::size_t l = 0; l < 8; ++l) coupling[l] = point(4, l >> 1);  // (a, b) = (l>>2, (l>>1)&1)
  m.settings_given_lambda = coupling;
  deterministic_bob(
      m, 2, [](auto, auto l) { return l & 1; }, [](auto, auto bo, auto) { return bo; });
  m.alice = deterministic_alice(8, 2, [](auto, auto l, auto) {
    return (((l >> 2) & 1) & ((l >> 1) & 1)) ^ (l & 1);
  });

  ZooEntry e{m.name, "settings determined by lambda; the message adds nothing", m, {}};
  e.expected = {
      {"j_l_to_b", 1.0, 1e-12, "lambda fixes b"},
      {"j_l_to_B", 1.0, 1e-12, "B = mu"},
      {"delta_x_to_b", 0.0, 1e-12, "X is redundant"},
      {"delta_x_to_B", 0.0, 1e-12, "X is redundant"},
      {"freedom_holds", 0.0, 0.0, "settings depend on lambda"},
      {"j_lambda_settings", 1.0, 1e-12, "lambda reveals (a,b)"},
      {"i_lambda_ab", 2.0, 1e-12, "two fair setting bits"},
      {"chsh_score", 1.0, 1e-12, "A = ab ^ mu"},
  };
  return e;
}

/// Bob's outcome is a private fair coin; he sends both his setting and his
/// outcome (X = 2b + B). Alice's marginal ignores b, so setting independence holds
/// while outcome independence fails.
inline ZooEntry zoo_setting_outcome_relay() {
  using namespace zoo_detail;
  HvcModel m;
  m.name = "setting-outcome-relay";
  m.notes = "B fair coin; X = 2b + B; A = ab ^ B";
  m.lambda_prior = FiniteDistribution::uniform(1);
  m.bob_outcome.assign(2, std::vector<Row>(1, Row{0.5, 0.5}));
  m.message.assign(2, Table2<Row>(2, std::vector<Row>(1)));
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t bo = 0; bo < 2; ++bo) m.message[b][bo][0] = point(4, 2 * b + bo);
  m.alice = deterministic_alice(1, 4, [](auto a, auto, auto x) { return (a & (x >> 1)) ^ (x & 1); });

  ZooEntry e{m.name, "violation with setting independence intact", m, {}};
  e.expected = {
      {"chsh_score", 1.0, 1e-12, "A ^ B = ab"},
      {"si_holds", 1.0, 0.0, "A is a fair coin for every (a, b)"},
      {"oi_holds", 0.0, 0.0, "A copies B"},
      {"j_l_to_B", 0.5, 1e-12, "single lambda, fair B"},
      {"delta_x_to_B", 0.5, 1e-12, "X carries B"},
  };
  return e;
}

inline std::vector<std::string> zoo_list() {
  return {"toy-tsirelson", "footnote-maximal", "lhv-best", "superdet-demo",
          "setting-outcome-relay"};
}

inline ZooEntry zoo_get(const std::string& name) {
  if (name == "toy-tsirelson") return zoo_toy_tsirelson();
  if (name == "footnote-maximal") return zoo_footnote_maximal();
  if (name == "lhv-best") return zoo_lhv_best();
  if (name == "superdet-demo") return zoo_superdet_demo();
  if (name == "setting-outcome-relay") return zoo_setting_outcome_relay();
  throw Error(ErrorCode::kUnknownModel, "'" + name + "'");
}

/// Every deterministic no-communication strategy pair with a fair binary lambda:
/// Alice tables [a][lambda] and Bob tables [b][lambda], 16 x 16 models.
inline std::vector<HvcModel> deterministic_local_models() {
  using namespace zoo_detail;
  std::vector<HvcModel> out;
  out.reserve(256);
  for (std::size_t fa = 0; fa < 16; ++fa)
    for (std::size_t fb = 0; fb < 16; ++fb) {
      HvcModel m;
      m.name = "local-" + std::to_string(fa) + "-" + std::to_string(fb);
      m.lambda_prior = FiniteDistribution::uniform(2);
      deterministic_bob(
          m, 1, [fb](auto b, auto l) { return (fb >> (2 * b + l)) & 1; },
          [](auto, auto, auto) { return 0; });
      m.alice = deterministic_alice(2, 1, [fa](auto a, auto l, auto) { return (fa >> (2 * a + l)) & 1; });
      out.push_back(std::move(m));
    }
  return out;
}

}  // namespace hvc
