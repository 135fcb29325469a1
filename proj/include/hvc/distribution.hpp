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
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hvc/error.hpp"

namespace hvc {

/// Normalization tolerance for a single probability vector.
inline constexpr double kSumTolerance = 1e-12;
/// Default tolerance for comparing derived quantities.
inline constexpr double kDefaultTolerance = 1e-9;

/// Probability vector over a labeled finite outcome set.
struct FiniteDistribution {
  std::vector<std::string> labels;
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }
  double operator[](std::size_t i) const { return probs[i]; }

  double total() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

  /// True when every entry is non-negative and the entries sum to one.
  bool is_valid(double tol = kSumTolerance) const {
    if (labels.size() != probs.size() || probs.empty()) return false;
    for (double p : probs) {
      if (!(p >= 0.0) || !std::isfinite(p)) return false;
    }
    return std::abs(total() - 1.0) <= tol;
  }

  static FiniteDistribution from_probs(std::vector<double> probs) {
    FiniteDistribution d;
    d.labels.reserve(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) d.labels.push_back(std::to_string(i));
    d.probs = std::move(probs);
    return d;
  }

  static FiniteDistribution uniform(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::kInvalidArgument, "uniform distribution over empty set");
    return from_probs(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  /// Point mass on outcome `k` of `n`.
  static FiniteDistribution point(std::size_t n, std::size_t k) {
    std::vector<double> p(n, 0.0);
    p.at(k) = 1.0;
    return from_probs(std::move(p));
  }

  static FiniteDistribution bernoulli(double p_one) { return from_probs({1.0 - p_one, p_one}); }

  bool operator==(const FiniteDistribution&) const = default;
};

/// Shannon entropy in bits, with 0 log 0 = 0.
inline double shannon_entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

inline double shannon_entropy(const FiniteDistribution& dist) { return shannon_entropy(dist.probs); }

inline double binary_entropy(double p) {
  const double q[2] = {p, 1.0 - p};
  return shannon_entropy(q);
}

}  // namespace hvc
