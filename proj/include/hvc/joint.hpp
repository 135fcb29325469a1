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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hvc/distribution.hpp"
#include "hvc/error.hpp"
#include "hvc/model.hpp"

namespace hvc {

/// The six random variables of one run, in storage order.
enum class Var : std::uint8_t { a = 0, b = 1, lambda = 2, B = 3, X = 4, A = 5 };

inline constexpr std::size_t kNumVars = 6;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::a, Var::b, Var::lambda,
                                                       Var::B, Var::X, Var::A};

inline constexpr std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

inline std::string_view var_name(Var v) {
  static constexpr std::array<std::string_view, kNumVars> names = {"a", "b", "lambda",
                                                                   "B", "X", "A"};
  return names[idx(v)];
}

inline Var parse_var(std::string_view name) {
  for (Var v : kAllVars) {
    if (var_name(v) == name) return v;
  }
  if (name == "l" || name == "λ") return Var::lambda;
  if (name == "x" || name == "𝒳") return Var::X;
  throw Error(ErrorCode::kUnknownVariable, "'" + std::string(name) + "'");
}

using Cell = std::array<std::size_t, kNumVars>;
using Shape = std::array<std::size_t, kNumVars>;

/// Exact joint table over (a, b, lambda, B, X, A), row-major in that order.
class JointDistribution {
 public:
  JointDistribution() = default;
  JointDistribution(Shape shape, std::vector<double> values)
      : shape_(shape), values_(std::move(values)) {
    std::size_t n = 1;
    for (std::size_t e : shape_) n *= e;
    if (n != values_.size()) {
      throw Error(ErrorCode::kUnsupportedShape, "joint table size does not match its shape");
    }
  }

  const Shape& shape() const { return shape_; }
  std::size_t extent(Var v) const { return shape_[idx(v)]; }
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }

  std::size_t offset(const Cell& c) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < kNumVars; ++i) off = off * shape_[i] + c[i];
    return off;
  }

  double operator()(const Cell& c) const { return values_[offset(c)]; }
  double at(std::size_t a, std::size_t b, std::size_t l, std::size_t bo, std::size_t x,
            std::size_t ao) const {
    return (*this)(Cell{a, b, l, bo, x, ao});
  }

  double total() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
  }

  /// Calls f(cell, probability) for every cell in storage order.
  template <typename F>
  void for_each(F&& f) const {
    Cell c{};
    for (std::size_t off = 0; off < values_.size(); ++off) {
      f(static_cast<const Cell&>(c), values_[off]);
      for (std::size_t i = kNumVars; i-- > 0;) {
        if (++c[i] < shape_[i]) break;
        c[i] = 0;
      }
    }
  }

 private:
  Shape shape_{};
  std::vector<double> values_;
};

namespace detail {

/// P(a, b, lambda, B, X) with Alice's stage left out, flattened over the first five axes.
inline std::vector<double> upstream_weights(const HvcModel& model) {
  const std::size_t na = model.num_alice_settings(), nb = model.num_bob_settings();
  const std::size_t nl = model.num_lambda(), nm = model.num_messages();
  std::vector<double> w(na * nb * nl * 2 * nm, 0.0);
  std::size_t off = 0;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t l = 0; l < nl; ++l) {
        const double pabl = model.setting_weight(a, b, l);
        for (std::size_t bo = 0; bo < 2; ++bo) {
          const double pb = pabl * model.bob_outcome[b][l][bo];
          for (std::size_t x = 0; x < nm; ++x) w[off++] = pb * model.message[b][bo][l][x];
        }
      }
  return w;
}

inline Shape model_shape(const HvcModel& model) {
  return {model.num_alice_settings(), model.num_bob_settings(), model.num_lambda(), 2,
          model.num_messages(), 2};
}

}  // namespace detail

/// Joint table of a model with an explicit Alice strategy, computed as an exact product.
inline JointDistribution enumerate_joint(const HvcModel& model, const AliceTable& alice) {
  const Shape shape = detail::model_shape(model);
  const std::vector<double> up = detail::upstream_weights(model);
  std::vector<double> values(up.size() * 2);
  std::size_t off = 0;
  for (std::size_t a = 0; a < shape[0]; ++a)
    for (std::size_t b = 0; b < shape[1]; ++b)
      for (std::size_t l = 0; l < shape[2]; ++l)
        for (std::size_t bo = 0; bo < 2; ++bo)
          for (std::size_t x = 0; x < shape[4]; ++x, ++off) {
            values[2 * off] = up[off] * alice[a][l][x][0];
            values[2 * off + 1] = up[off] * alice[a][l][x][1];
          }
  return JointDistribution(shape, std::move(values));
}

inline JointDistribution enumerate_joint(const HvcModel& model) {
  if (model.has_optimal_alice()) {
    throw Error(ErrorCode::kAliceUnresolved,
                "model '" + model.name + "' has no explicit Alice strategy; derive it first");
  }
  return enumerate_joint(model, model.alice_table());
}

/// Dense marginal table over an ordered variable list, row-major in that order.
struct MarginalTable {
  std::vector<Var> vars;
  std::vector<std::size_t> dims;
  std::vector<double> values;

  std::size_t index(std::initializer_list<std::size_t> assignment) const {
    std::size_t off = 0, i = 0;
    for (std::size_t v : assignment) off = off * dims[i++] + v;
    return off;
  }
};

inline MarginalTable marginal_table(const JointDistribution& joint, const std::vector<Var>& keep) {
  MarginalTable t;
  t.vars = keep;
  std::size_t n = 1;
  for (Var v : keep) {
    t.dims.push_back(joint.extent(v));
    n *= joint.extent(v);
  }
  t.values.assign(n, 0.0);
  joint.for_each([&](const Cell& c, double p) {
    if (p == 0.0) return;
    std::size_t off = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) off = off * t.dims[i] + c[idx(keep[i])];
    t.values[off] += p;
  });
  return t;
}

/// Distribution of the tuple `keep`; labels read like "a=0,b=1".
inline FiniteDistribution marginalize(const JointDistribution& joint, const std::vector<Var>& keep) {
  if (keep.empty()) throw Error(ErrorCode::kEmptySource, "marginalize needs at least one variable");
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (keep[i] == keep[j])
        throw Error(ErrorCode::kInvalidArgument, "variable listed twice: " +
                                                     std::string(var_name(keep[i])));
  MarginalTable t = marginal_table(joint, keep);
  FiniteDistribution d;
  d.probs = std::move(t.values);
  d.labels.reserve(d.probs.size());
  std::vector<std::size_t> digit(keep.size(), 0);
  for (std::size_t off = 0; off < d.probs.size(); ++off) {
    std::string label;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (i) label += ',';
      label += std::string(var_name(keep[i])) + "=" + std::to_string(digit[i]);
    }
    d.labels.push_back(std::move(label));
    for (std::size_t i = keep.size(); i-- > 0;) {
      if (++digit[i] < t.dims[i]) break;
      digit[i] = 0;
    }
  }
  return d;
}

inline FiniteDistribution marginalize(const JointDistribution& joint,
                                      const std::vector<std::string>& names) {
  std::vector<Var> keep;
  for (const auto& n : names) keep.push_back(parse_var(n));
  return marginalize(joint, keep);
}

using Assignment = std::map<Var, std::size_t>;

/// Joint conditioned on `given`: cells incompatible with it become zero, the rest are
/// rescaled by 1 / P(given).
inline JointDistribution condition(const JointDistribution& joint, const Assignment& given) {
  for (const auto& [v, value] : given) {
    if (value >= joint.extent(v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(var_name(v)) + "=" + std::to_string(value) + " out of range");
    }
  }
  std::vector<double> out(joint.size(), 0.0);
  double mass = 0.0;
  std::size_t off = 0;
  joint.for_each([&](const Cell& c, double p) {
    bool match = true;
    for (const auto& [v, value] : given) match = match && c[idx(v)] == value;
    if (match) {
      out[off] = p;
      mass += p;
    }
    ++off;
  });
  if (!(mass > 0.0)) throw Error(ErrorCode::kZeroCondition, "conditioning event has probability 0");
  for (double& v : out) v /= mass;
  return JointDistribution(joint.shape(), std::move(out));
}

}  // namespace hvc
