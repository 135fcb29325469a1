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

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hvc/distribution.hpp"

namespace hvc {

/// One conditional-distribution row of a kernel table.
using Row = std::vector<double>;
template <typename T>
using Table2 = std::vector<std::vector<T>>;
template <typename T>
using Table3 = std::vector<std::vector<std::vector<T>>>;

/// Sentinel: Alice's strategy is to be derived as the CHSH-optimal guesser.
struct OptimalAlice {
  bool operator==(const OptimalAlice&) const = default;
};

/// Explicit strategy, indexed [a][lambda][message] -> P(A).
using AliceTable = Table3<Row>;
using AliceStrategy = std::variant<OptimalAlice, AliceTable>;

/// A local hidden-variable model augmented with a one-way message from Bob to Alice.
///
/// Generation order per run: settings (a, b) and lambda are drawn, Bob draws
/// B ~ bob_outcome[b][lambda], then the message X ~ message[b][B][lambda], then
/// Alice draws A ~ alice[a][lambda][X].
struct HvcModel {
  std::string name;
  std::string notes;

  FiniteDistribution lambda_prior = FiniteDistribution::uniform(1);
  FiniteDistribution alice_settings = FiniteDistribution::uniform(2);
  FiniteDistribution bob_settings = FiniteDistribution::uniform(2);

  /// When set, settings are drawn from P(a,b|lambda) (row index a * N_b + b)
  /// instead of independently of lambda. Such a model does not have free
  /// setting choice; the priors above must then equal its marginals.
  std::optional<std::vector<Row>> settings_given_lambda;

  Table2<Row> bob_outcome;  // [b][lambda] -> P(B)
  Table3<Row> message;      // [b][B][lambda] -> P(X)
  AliceStrategy alice = OptimalAlice{};

  std::size_t num_lambda() const { return lambda_prior.size(); }
  std::size_t num_alice_settings() const { return alice_settings.size(); }
  std::size_t num_bob_settings() const { return bob_settings.size(); }
  std::size_t num_messages() const {
    if (message.empty() || message[0].empty() || message[0][0].empty()) return 0;
    return message[0][0][0].size();
  }

  bool has_optimal_alice() const { return std::holds_alternative<OptimalAlice>(alice); }
  const AliceTable& alice_table() const { return std::get<AliceTable>(alice); }
  bool settings_free() const { return !settings_given_lambda.has_value(); }

  /// P(a, b, lambda).
  double setting_weight(std::size_t a, std::size_t b, std::size_t lambda) const {
    if (settings_given_lambda) {
      return lambda_prior[lambda] * (*settings_given_lambda)[lambda][a * num_bob_settings() + b];
    }
    return alice_settings[a] * bob_settings[b] * lambda_prior[lambda];
  }

  bool operator==(const HvcModel&) const = default;
};

struct Violation {
  std::string path;
  std::string message;
};

namespace detail {

inline std::string index_path(const std::string& root, std::initializer_list<std::size_t> idx) {
  std::string out = root;
  for (std::size_t i : idx) out += "[" + std::to_string(i) + "]";
  return out;
}

inline void check_row(const Row& row, std::size_t expected_size, const std::string& path,
                      std::vector<Violation>& out) {
  if (row.size() != expected_size) {
    out.push_back({path, "expected " + std::to_string(expected_size) + " entries, found " +
                             std::to_string(row.size())});
    return;
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < row.size(); ++k) {
    const double p = row[k];
    if (!std::isfinite(p)) {
      out.push_back({path + "[" + std::to_string(k) + "]", "entry is not finite"});
      return;
    }
    if (p < 0.0) {
      out.push_back({path + "[" + std::to_string(k) + "]",
                     "negative probability " + std::to_string(p)});
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    out.push_back({path, "probabilities sum to " + std::to_string(sum) + ", expected 1"});
  }
}

inline void check_prior(const FiniteDistribution& d, const std::string& path,
                        std::vector<Violation>& out) {
  if (d.probs.empty()) {
    out.push_back({path, "distribution is empty"});
    return;
  }
  if (d.labels.size() != d.probs.size()) {
    out.push_back({path, "label count does not match probability count"});
  }
  check_row(d.probs, d.probs.size(), path, out);
}

}  // namespace detail

/// Returns every structural or normalization breach of `model`, each tagged
/// with the JSON path of the offending table entry. Empty means well formed.
inline std::vector<Violation> validate_model(const HvcModel& model) {
  using detail::check_row;
  using detail::index_path;
  std::vector<Violation> out;

  detail::check_prior(model.lambda_prior, "lambda.probs", out);
  detail::check_prior(model.alice_settings, "settings.alice_probs", out);
  detail::check_prior(model.bob_settings, "settings.bob_probs", out);

  const std::size_t n_lambda = model.num_lambda();
  const std::size_t n_a = model.num_alice_settings();
  const std::size_t n_b = model.num_bob_settings();
  const std::size_t n_msg = model.num_messages();

  if (model.bob_outcome.size() != n_b) {
    out.push_back({"bob_outcome", "expected " + std::to_string(n_b) + " setting rows"});
  } else {
    for (std::size_t b = 0; b < n_b; ++b) {
      if (model.bob_outcome[b].size() != n_lambda) {
        out.push_back({index_path("bob_outcome", {b}), "expected one row per lambda value"});
        continue;
      }
      for (std::size_t l = 0; l < n_lambda; ++l) {
        check_row(model.bob_outcome[b][l], 2, index_path("bob_outcome", {b, l}), out);
      }
    }
  }

  if (n_msg == 0) {
    out.push_back({"message", "message alphabet is empty"});
  } else if (model.message.size() != n_b) {
    out.push_back({"message", "expected " + std::to_string(n_b) + " setting rows"});
  } else {
    for (std::size_t b = 0; b < n_b; ++b) {
      if (model.message[b].size() != 2) {
        out.push_back({index_path("message", {b}), "expected two outcome rows"});
        continue;
      }
      for (std::size_t bo = 0; bo < 2; ++bo) {
        if (model.message[b][bo].size() != n_lambda) {
          out.push_back({index_path("message", {b, bo}), "expected one row per lambda value"});
          continue;
        }
        for (std::size_t l = 0; l < n_lambda; ++l) {
          check_row(model.message[b][bo][l], n_msg, index_path("message", {b, bo, l}), out);
        }
      }
    }
  }

  if (!model.has_optimal_alice()) {
    const auto& alice = model.alice_table();
    if (alice.size() != n_a) {
      out.push_back({"alice", "expected " + std::to_string(n_a) + " setting rows"});
    } else {
      for (std::size_t a = 0; a < n_a; ++a) {
        if (alice[a].size() != n_lambda) {
          out.push_back({index_path("alice", {a}), "expected one row per lambda value"});
          continue;
        }
        for (std::size_t l = 0; l < n_lambda; ++l) {
          if (alice[a][l].size() != n_msg) {
            out.push_back({index_path("alice", {a, l}), "expected one row per message value"});
            continue;
          }
          for (std::size_t x = 0; x < n_msg; ++x) {
            check_row(alice[a][l][x], 2, index_path("alice", {a, l, x}), out);
          }
        }
      }
    }
  }

  if (model.settings_given_lambda) {
    const auto& coupling = *model.settings_given_lambda;
    if (coupling.size() != n_lambda) {
      out.push_back({"settings.given_lambda", "expected one row per lambda value"});
    } else {
      std::vector<double> alice_marginal(n_a, 0.0);
      std::vector<double> bob_marginal(n_b, 0.0);
      bool rows_ok = true;
      for (std::size_t l = 0; l < n_lambda; ++l) {
        const std::size_t before = out.size();
        check_row(coupling[l], n_a * n_b, index_path("settings.given_lambda", {l}), out);
        if (out.size() != before) {
          rows_ok = false;
          continue;
        }
        for (std::size_t a = 0; a < n_a; ++a) {
          for (std::size_t b = 0; b < n_b; ++b) {
            const double w = model.lambda_prior.probs.size() == n_lambda
                                 ? model.lambda_prior[l] * coupling[l][a * n_b + b]
                                 : 0.0;
            alice_marginal[a] += w;
            bob_marginal[b] += w;
          }
        }
      }
      if (rows_ok) {
        for (std::size_t a = 0; a < n_a; ++a) {
          if (std::abs(alice_marginal[a] - model.alice_settings[a]) > kDefaultTolerance) {
            out.push_back({"settings.alice_probs", "does not match the lambda-coupled marginal"});
            break;
          }
        }
        for (std::size_t b = 0; b < n_b; ++b) {
          if (std::abs(bob_marginal[b] - model.bob_settings[b]) > kDefaultTolerance) {
            out.push_back({"settings.bob_probs", "does not match the lambda-coupled marginal"});
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace hvc
