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
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string_view>

#include "hvc/chsh.hpp"
#include "hvc/distribution.hpp"
#include "hvc/error.hpp"
#include "hvc/parallel.hpp"
#include "hvc/rng.hpp"

// One-bit simulation of singlet correlations. Bob holds setting b, outputs
// B = -sgn(b.l1) and sends X = sgn(b.l1) sgn(b.l2); Alice outputs
// A = sgn(a.(l1 + X l2)). Then E[AB] = -a.b. Outcomes are reported as bits
// via v -> (1 - v) / 2.
namespace hvc::tb {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Unit vector in the x-z plane at `deg` degrees from +z.
inline Vec3 in_plane(double deg) {
  const double t = deg * std::numbers::pi / 180.0;
  return {std::sin(t), 0.0, std::cos(t)};
}

/// Uniform on the sphere: cos(theta) uniform in [-1, 1], phi uniform in [0, 2 pi).
inline Vec3 random_unit_vector(Rng& rng) {
  const double z = 2.0 * uniform01(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

/// sgn with sgn(0) = +1.
inline int sgn(double x) { return x >= 0.0 ? 1 : -1; }
inline int to_bit(int pm) { return (1 - pm) / 2; }

/// The transmitted bit, +1 or -1.
inline int message(const Vec3& b, const Vec3& l1, const Vec3& l2) {
  return sgn(dot(b, l1)) * sgn(dot(b, l2));
}

struct Round {
  int A = 0;  // bit
  int B = 0;  // bit
  int X = 1;  // +1 / -1
};

inline Round play_round(const Vec3& a, const Vec3& b, const Vec3& l1, const Vec3& l2) {
  Round r;
  r.X = message(b, l1, l2);
  r.B = to_bit(-sgn(dot(b, l1)));
  const Vec3 sum = {l1[0] + r.X * l2[0], l1[1] + r.X * l2[1], l1[2] + r.X * l2[2]};
  r.A = to_bit(sgn(dot(a, sum)));
  return r;
}

inline Round play_round(const Vec3& a, const Vec3& b, Rng& rng) {
  const Vec3 l1 = random_unit_vector(rng);
  const Vec3 l2 = random_unit_vector(rng);
  return play_round(a, b, l1, l2);
}

struct Config {
  Vec3 a_vec{0.0, 0.0, 1.0};
  Vec3 b_vec{0.0, 0.0, 1.0};
  std::uint64_t rounds = 1'000'000;
  std::uint64_t seed = 1;
  std::size_t chunks = 1;
  /// 0 = hardware concurrency. Does not affect results.
  std::size_t threads = 0;
};

struct Tally {
  std::array<std::array<std::uint64_t, 2>, 2> counts{};  // [A][B]
  std::uint64_t x_plus = 0;
  std::uint64_t rounds = 0;

  Tally& operator+=(const Tally& o) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) counts[i][j] += o.counts[i][j];
    x_plus += o.x_plus;
    rounds += o.rounds;
    return *this;
  }
  bool operator==(const Tally&) const = default;
};

struct Estimate {
  double correlator = 0.0;
  double std_error = 0.0;
  Tally tally;
  std::uint64_t seed = 0;
  std::size_t chunks = 0;

  std::uint64_t rounds_used() const { return tally.rounds; }
};

namespace detail {

inline void require_unit(const Vec3& v, std::string_view what) {
  if (std::abs(norm(v) - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is not a unit vector");
  }
}

inline Tally run_chunk(const Vec3& a, const Vec3& b, std::uint64_t rounds, std::uint64_t seed,
                       std::size_t chunk) {
  Rng rng = make_stream(seed, chunk);
  Tally t;
  for (std::uint64_t i = 0; i < rounds; ++i) {
    const Round r = play_round(a, b, rng);
    ++t.counts[r.A][r.B];
    if (r.X > 0) ++t.x_plus;
  }
  t.rounds = rounds;
  return t;
}

}  // namespace detail

/// Rounds are split into `chunks` blocks, each driven by its own stream derived
/// from (seed, chunk index); tallies are summed, so the result depends only on
/// (seed, chunks).
inline Tally simulate(const Config& cfg) {
  detail::require_unit(cfg.a_vec, "a_vec");
  detail::require_unit(cfg.b_vec, "b_vec");
  if (cfg.rounds == 0) throw Error(ErrorCode::kEmptySample, "rounds must be positive");
  if (cfg.chunks == 0) throw Error(ErrorCode::kInvalidArgument, "chunks must be positive");
  const std::uint64_t base = cfg.rounds / cfg.chunks, extra = cfg.rounds % cfg.chunks;
  const auto parts = parallel_map(cfg.chunks, cfg.threads, [&](std::size_t c) {
    const std::uint64_t n = base + (c < extra ? 1 : 0);
    return detail::run_chunk(cfg.a_vec, cfg.b_vec, n, cfg.seed, c);
  });
  Tally total;
  for (const Tally& t : parts) total += t;
  return total;
}

/// E[A B] in the +-1 convention with its binomial standard error.
inline Estimate correlator(const Config& cfg) {
  Estimate e;
  e.tally = simulate(cfg);
  e.seed = cfg.seed;
  e.chunks = cfg.chunks;
  const auto& c = e.tally.counts;
  const double same = static_cast<double>(c[0][0] + c[1][1]);
  const double diff = static_cast<double>(c[0][1] + c[1][0]);
  const double n = static_cast<double>(e.tally.rounds);
  e.correlator = (same - diff) / n;
  e.std_error = std::sqrt(std::max(0.0, 1.0 - e.correlator * e.correlator) / n);
  return e;
}

/// Alice's settings a0, a1 then Bob's b0, b1.
using ChshSettings = std::array<Vec3, 4>;

/// The coplanar settings reaching the quantum maximum for E = -a.b.
inline ChshSettings optimal_chsh_settings() {
  return {in_plane(0.0), in_plane(90.0), in_plane(45.0), in_plane(135.0)};
}

struct ChshEstimate {
  int variant = 0;
  double score = 0.0;
  double std_error = 0.0;
  std::array<std::array<double, 2>, 2> win_probs{};
  std::array<std::array<double, 2>, 2> correlators{};
  std::uint64_t rounds_used = 0;
  std::uint64_t seed = 0;
};

/// Variant whose ideal singlet score (E = -a.b) is largest; ties go to the lowest index.
inline int ideal_variant(const ChshSettings& s) {
  int best = 0;
  double best_score = -1.0;
  for (int v = 0; v < kNumVariants; ++v) {
    const ChshVariant cv = ChshVariant::from_index(v);
    double score = 0.0;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        const double p_differ = (1.0 + dot(s[a], s[2 + b])) / 2.0;
        score += 0.25 * (cv.target(a, b) ? p_differ : 1.0 - p_differ);
      }
    if (score > best_score + 1e-12) {
      best_score = score;
      best = v;
    }
  }
  return best;
}

/// Plays each of the four setting pairs rounds/4 times and scores the variant
/// best suited to the settings.
inline ChshEstimate chsh(const ChshSettings& settings, std::uint64_t rounds, std::uint64_t seed,
                         std::size_t chunks = 1, std::size_t threads = 0) {
  if (rounds < 4) throw Error(ErrorCode::kEmptySample, "need at least 4 rounds for four setting pairs");
  ChshEstimate out;
  out.seed = seed;
  out.variant = ideal_variant(settings);
  const ChshVariant v = ChshVariant::from_index(out.variant);
  double var = 0.0;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Config cfg;
      cfg.a_vec = settings[a];
      cfg.b_vec = settings[2 + b];
      cfg.rounds = rounds / 4;
      cfg.seed = stream_seed(seed, 2 * a + b);
      cfg.chunks = chunks;
      cfg.threads = threads;
      const Estimate e = correlator(cfg);
      const auto& c = e.tally.counts;
      const double n = static_cast<double>(e.tally.rounds);
      const double differ = static_cast<double>(c[0][1] + c[1][0]) / n;
      const double p = v.target(a, b) ? differ : 1.0 - differ;
      out.win_probs[a][b] = p;
      out.correlators[a][b] = e.correlator;
      out.score += 0.25 * p;
      var += p * (1.0 - p) / n;
      out.rounds_used += e.tally.rounds;
    }
  out.std_error = std::sqrt(var) / 4.0;
  return out;
}

enum class EntropyMethod { kQuadrature, kMonteCarlo };

inline std::string_view method_name(EntropyMethod m) {
  return m == EntropyMethod::kQuadrature ? "quadrature" : "monte_carlo";
}

struct EntropyEstimate {
  EntropyMethod method = EntropyMethod::kQuadrature;
  double bits = 0.0;
  double std_error = 0.0;  // zero for quadrature
  std::uint64_t resolution = 0;
};

/// Entropy of X for fixed hidden vectors at angle theta, averaged over b:
/// P(X = -1 | theta) = theta / pi.
inline double message_entropy_at_angle(double theta) { return binary_entropy(theta / std::numbers::pi); }

/// E[h(theta / pi)] over the angle between two independent uniform unit vectors
/// (density sin(theta) / 2 on [0, pi]).
inline EntropyEstimate message_entropy(EntropyMethod method, std::uint64_t resolution,
                                       std::uint64_t seed = 1) {
  EntropyEstimate out;
  out.method = method;
  out.resolution = resolution;
  if (method == EntropyMethod::kQuadrature) {
    if (resolution < 100) throw Error(ErrorCode::kResolutionTooLow, "quadrature needs >= 100 nodes");
    const std::uint64_t n = resolution + (resolution % 2);  // composite Simpson needs an even count
    const double h = std::numbers::pi / static_cast<double>(n);
    const auto f = [](double t) { return 0.5 * std::sin(t) * message_entropy_at_angle(t); };
    double sum = f(0.0) + f(std::numbers::pi);
    for (std::uint64_t i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(static_cast<double>(i) * h);
    out.bits = sum * h / 3.0;
    return out;
  }
  if (resolution < 100'000) throw Error(ErrorCode::kResolutionTooLow, "Monte Carlo needs >= 1e5 samples");
  Rng rng = make_stream(seed, 0);
  double mean = 0.0, m2 = 0.0;
  for (std::uint64_t i = 0; i < resolution; ++i) {
    const Vec3 l1 = random_unit_vector(rng);
    const Vec3 l2 = random_unit_vector(rng);
    const double theta = std::acos(std::clamp(dot(l1, l2), -1.0, 1.0));
    const double x = message_entropy_at_angle(theta);
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  out.bits = mean;
  out.std_error = std::sqrt(m2 / static_cast<double>(resolution - 1) / static_cast<double>(resolution));
  return out;
}

}  // namespace hvc::tb
