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
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hvc/chsh.hpp"
#include "hvc/conditions.hpp"
#include "hvc/model.hpp"
#include "hvc/parallel.hpp"
#include "hvc/rng.hpp"

namespace hvc {

/// Structural restrictions on the model family being searched.
enum class Constraint {
  kNone,
  /// Bob's outcome and message kernels ignore b, so (lambda, X) says nothing about b.
  kMessageIndependentOfB,
  /// B is a fair coin and the message ignores B, so (lambda, X) says nothing about B.
  kOutcomeUninformative,
  /// B is a deterministic function of lambda alone, so X cannot add outcome information.
  kDeltaBZeroStructural,
};

inline std::string_view constraint_name(Constraint c) {
  switch (c) {
    case Constraint::kNone: return "none";
    case Constraint::kMessageIndependentOfB: return "message_independent_of_b";
    case Constraint::kOutcomeUninformative: return "outcome_uninformative";
    case Constraint::kDeltaBZeroStructural: return "delta_b_zero_structural";
  }
  return "?";
}

inline Constraint parse_constraint(std::string_view name) {
  for (Constraint c : {Constraint::kNone, Constraint::kMessageIndependentOfB,
                       Constraint::kOutcomeUninformative, Constraint::kDeltaBZeroStructural}) {
    if (constraint_name(c) == name) return c;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown constraint '" + std::string(name) + "'");
}

struct SearchConfig {
  std::size_t num_lambda = 2;
  std::size_t num_messages = 2;
  Constraint constraint = Constraint::kNone;
  std::size_t restarts = 50;
  std::size_t steps_per_restart = 2000;
  double step_size = 0.1;
  std::uint64_t seed = 1;
  /// Step size is multiplied by `decay` after every `decay_every` accepted moves.
  double decay = 0.95;
  std::size_t decay_every = 100;
  /// 0 = hardware concurrency.
  std::size_t threads = 0;
  /// Run validate_model on every candidate and throw on a breach.
  bool validate_candidates = false;
};

struct SearchResult {
  HvcModel best_model;
  double best_score = 0.0;
  int best_variant = 0;
  std::size_t best_restart = 0;
  std::vector<double> trajectory;             // best score of each restart
  std::vector<std::vector<double>> accepted;  // accepted scores, per restart
  ConditionProfile profile;
};

namespace search_detail {

enum class TableId { kLambda, kOutcome, kMessage };

struct RowRef {
  TableId table;
  std::size_t i = 0, j = 0, k = 0;
};

/// Rows that are tied together by the constraint and move as one.
struct RowGroup {
  std::vector<RowRef> members;
  std::size_t width = 0;
  bool deterministic = false;
};

inline Row& row_at(HvcModel& m, const RowRef& r) {
  switch (r.table) {
    case TableId::kLambda: return m.lambda_prior.probs;
    case TableId::kOutcome: return m.bob_outcome[r.i][r.j];
    case TableId::kMessage: return m.message[r.i][r.j][r.k];
  }
  return m.lambda_prior.probs;
}

inline void set_group(HvcModel& m, const RowGroup& g, const Row& row) {
  for (const RowRef& r : g.members) row_at(m, r) = row;
}

/// Model with the right shapes; B kernel rows start as fair coins, messages as uniform.
inline HvcModel skeleton(std::size_t nl, std::size_t nm) {
  HvcModel m;
  m.name = "search";
  m.lambda_prior = FiniteDistribution::uniform(nl);
  m.bob_outcome.assign(2, std::vector<Row>(nl, Row{0.5, 0.5}));
  m.message.assign(2, Table2<Row>(2, std::vector<Row>(nl, Row(nm, 1.0 / static_cast<double>(nm)))));
  m.alice = OptimalAlice{};
  return m;
}

inline std::vector<RowGroup> row_groups(std::size_t nl, std::size_t nm, Constraint c) {
  std::vector<RowGroup> groups;
  if (nl > 1) groups.push_back({{{TableId::kLambda}}, nl, false});

  switch (c) {
    case Constraint::kNone:
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t l = 0; l < nl; ++l) groups.push_back({{{TableId::kOutcome, b, l}}, 2, false});
      break;
    case Constraint::kMessageIndependentOfB:
      for (std::size_t l = 0; l < nl; ++l)
        groups.push_back({{{TableId::kOutcome, 0, l}, {TableId::kOutcome, 1, l}}, 2, false});
      break;
    case Constraint::kOutcomeUninformative:
      break;
    case Constraint::kDeltaBZeroStructural:
      for (std::size_t l = 0; l < nl; ++l)
        groups.push_back({{{TableId::kOutcome, 0, l}, {TableId::kOutcome, 1, l}}, 2, true});
      break;
  }

  if (nm > 1) {
    switch (c) {
      case Constraint::kNone:
      case Constraint::kDeltaBZeroStructural:
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t bo = 0; bo < 2; ++bo)
            for (std::size_t l = 0; l < nl; ++l)
              groups.push_back({{{TableId::kMessage, b, bo, l}}, nm, false});
        break;
      case Constraint::kMessageIndependentOfB:
        for (std::size_t bo = 0; bo < 2; ++bo)
          for (std::size_t l = 0; l < nl; ++l)
            groups.push_back(
                {{{TableId::kMessage, 0, bo, l}, {TableId::kMessage, 1, bo, l}}, nm, false});
        break;
      case Constraint::kOutcomeUninformative:
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t l = 0; l < nl; ++l)
            groups.push_back(
                {{{TableId::kMessage, b, 0, l}, {TableId::kMessage, b, 1, l}}, nm, false});
        break;
    }
  }
  return groups;
}

/// Flat Dirichlet draw, or a uniformly chosen vertex for deterministic groups.
inline Row sample_row(const RowGroup& g, Rng& rng) {
  Row row(g.width, 0.0);
  if (g.deterministic) {
    row[static_cast<std::size_t>(uniform01(rng) * static_cast<double>(g.width))] = 1.0;
    return row;
  }
  double sum = 0.0;
  for (double& p : row) sum += (p = exponential1(rng));
  for (double& p : row) p /= sum;
  return row;
}

/// Additive noise in [-step, step) per entry, negatives clamped, then renormalized.
inline Row perturb_row(const Row& current, const RowGroup& g, double step, Rng& rng) {
  if (g.deterministic) return sample_row(g, rng);
  Row row = current;
  double sum = 0.0;
  for (double& p : row) {
    p = std::max(0.0, p + step * (2.0 * uniform01(rng) - 1.0));
    sum += p;
  }
  if (!(sum > 0.0)) return Row(g.width, 1.0 / static_cast<double>(g.width));
  for (double& p : row) p /= sum;
  return row;
}

struct RestartOutcome {
  HvcModel model;
  double score = 0.0;
  int variant = 0;
  std::vector<double> accepted;
};

inline void check_candidate(const HvcModel& m) {
  const auto violations = validate_model(m);
  if (!violations.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "search produced an invalid model at " + violations.front().path + ": " +
                    violations.front().message);
  }
}

inline RestartOutcome run_restart(const SearchConfig& cfg, std::size_t restart) {
  Rng rng = make_stream(cfg.seed, restart);
  const auto groups = row_groups(cfg.num_lambda, cfg.num_messages, cfg.constraint);
  HvcModel m = skeleton(cfg.num_lambda, cfg.num_messages);
  for (const RowGroup& g : groups) set_group(m, g, sample_row(g, rng));
  if (cfg.validate_candidates) check_candidate(m);

  RestartOutcome out;
  BestVariant best = best_optimal_chsh(m);
  out.accepted.push_back(best.score);
  if (groups.empty()) {
    out.model = std::move(m);
    out.score = best.score;
    out.variant = best.variant;
    return out;
  }

  double step = cfg.step_size;
  std::size_t accepted_moves = 0;
  for (std::size_t s = 0; s < cfg.steps_per_restart; ++s) {
    const RowGroup& g = groups[static_cast<std::size_t>(uniform01(rng) * static_cast<double>(groups.size()))];
    const Row saved = row_at(m, g.members.front());
    set_group(m, g, perturb_row(saved, g, step, rng));
    if (cfg.validate_candidates) check_candidate(m);
    const BestVariant cand = best_optimal_chsh(m);
    if (cand.score > best.score) {
      best = cand;
      out.accepted.push_back(best.score);
      if (++accepted_moves % cfg.decay_every == 0) step *= cfg.decay;
    } else {
      set_group(m, g, saved);
    }
  }
  out.model = std::move(m);
  out.score = best.score;
  out.variant = best.variant;
  return out;
}

}  // namespace search_detail

/// Random model of the given family: every free row is a flat-Dirichlet draw,
/// settings are uniform and Alice is left OPTIMAL.
inline HvcModel random_model(std::size_t num_lambda, std::size_t num_messages, Constraint c, Rng& rng) {
  if (num_lambda == 0 || num_messages == 0) {
    throw Error(ErrorCode::kInvalidArgument, "cardinalities must be at least 1");
  }
  using namespace search_detail;
  HvcModel m = skeleton(num_lambda, num_messages);
  m.name = "random-" + std::string(constraint_name(c));
  for (const RowGroup& g : row_groups(num_lambda, num_messages, c)) set_group(m, g, sample_row(g, rng));
  return m;
}

/// Random-restart hill climbing on the optimal-Alice CHSH score (max over the
/// eight variants). Restarts use independent streams, so the result does not
/// depend on the thread count.
inline SearchResult hill_climb(const SearchConfig& cfg) {
  if (cfg.num_lambda == 0 || cfg.num_messages == 0 || cfg.restarts == 0 ||
      cfg.steps_per_restart == 0 || !(cfg.step_size > 0.0 && cfg.step_size <= 1.0) ||
      cfg.decay_every == 0) {
    throw Error(ErrorCode::kInvalidArgument, "invalid search configuration");
  }
  auto outcomes = parallel_map(cfg.restarts, cfg.threads,
                               [&cfg](std::size_t r) { return search_detail::run_restart(cfg, r); });

  SearchResult result;
  result.best_score = -1.0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    result.trajectory.push_back(outcomes[r].score);
    if (outcomes[r].score > result.best_score) {
      result.best_score = outcomes[r].score;
      result.best_variant = outcomes[r].variant;
      result.best_restart = r;
    }
  }
  result.best_model = outcomes[result.best_restart].model;
  result.best_model.name = "search-best";
  for (auto& o : outcomes) result.accepted.push_back(std::move(o.accepted));
  result.profile = table1_profile(result.best_model);
  return result;
}

}  // namespace hvc
