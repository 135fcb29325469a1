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
#include <string>
#include <string_view>
#include <vector>

#include "hvc/distribution.hpp"
#include "hvc/joint.hpp"

namespace hvc {

/// A discrete quantity read off a cell: a tuple of variables, or the parity of two bits.
class Key {
 public:
  Key() = default;
  Key(std::initializer_list<Var> vars) : vars_(vars) {}
  explicit Key(std::vector<Var> vars) : vars_(std::move(vars)) {}

  /// x XOR y for two bit-valued variables.
  static Key parity(Var x, Var y) {
    Key k{x, y};
    k.parity_ = true;
    return k;
  }

  /// "lambda,X" for a tuple, "B^b" for a parity.
  static Key parse(std::string_view text) {
    const auto caret = text.find('^');
    if (caret != std::string_view::npos) {
      return parity(parse_var(text.substr(0, caret)), parse_var(text.substr(caret + 1)));
    }
    std::vector<Var> vars;
    while (!text.empty()) {
      const auto comma = text.find(',');
      vars.push_back(parse_var(text.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return Key(std::move(vars));
  }

  bool empty() const { return vars_.empty(); }
  bool is_parity() const { return parity_; }
  const std::vector<Var>& vars() const { return vars_; }

  std::size_t cardinality(const Shape& shape) const {
    if (parity_) {
      if (shape[idx(vars_[0])] != 2 || shape[idx(vars_[1])] != 2) {
        throw Error(ErrorCode::kUnsupportedShape, "parity needs two bit-valued variables");
      }
      return 2;
    }
    std::size_t n = 1;
    for (Var v : vars_) n *= shape[idx(v)];
    return n;
  }

  std::size_t value(const Cell& c, const Shape& shape) const {
    if (parity_) return c[idx(vars_[0])] ^ c[idx(vars_[1])];
    std::size_t off = 0;
    for (Var v : vars_) off = off * shape[idx(v)] + c[idx(v)];
    return off;
  }

  std::string name() const {
    std::string out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i) out += parity_ ? "^" : ",";
      out += var_name(vars_[i]);
    }
    return out;
  }

 private:
  std::vector<Var> vars_;
  bool parity_ = false;
};

/// P(from = i, target = j) laid out as rows i, columns j.
struct PairTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
  double row_mass(std::size_t i) const {
    double s = 0.0;
    for (std::size_t j = 0; j < cols; ++j) s += (*this)(i, j);
    return s;
  }
  double row_max(std::size_t i) const {
    double m = 0.0;
    for (std::size_t j = 0; j < cols; ++j) m = std::max(m, (*this)(i, j));
    return m;
  }
  double col_mass(std::size_t j) const {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += (*this)(i, j);
    return s;
  }
};

inline PairTable pair_table(const JointDistribution& joint, const Key& from, const Key& target) {
  PairTable t;
  t.rows = from.empty() ? 1 : from.cardinality(joint.shape());
  t.cols = target.cardinality(joint.shape());
  t.values.assign(t.rows * t.cols, 0.0);
  const Shape& shape = joint.shape();
  joint.for_each([&](const Cell& c, double p) {
    if (p == 0.0) return;
    const std::size_t i = from.empty() ? 0 : from.value(c, shape);
    t.values[i * t.cols + target.value(c, shape)] += p;
  });
  return t;
}

namespace detail {
inline void require_source(const Key& from) {
  if (from.empty()) throw Error(ErrorCode::kEmptySource, "conditioning set is empty");
}

inline Key union_key(const std::vector<Var>& base, const std::vector<Var>& extra) {
  std::vector<Var> vars = base;
  for (Var v : extra) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  return Key(std::move(vars));
}
}  // namespace detail

/// Guessed information J(from -> target): the average probability of guessing
/// `target` correctly with the max-posterior rule after seeing `from`.
inline double guessed_info(const JointDistribution& joint, const Key& from, const Key& target) {
  detail::require_source(from);
  const PairTable t = pair_table(joint, from, target);
  double j = 0.0;
  for (std::size_t i = 0; i < t.rows; ++i) j += t.row_max(i);
  return j;
}

/// Transmitted information: J(base + message -> target) - J(base -> target).
inline double transmitted_info(const JointDistribution& joint, const std::vector<Var>& message_vars,
                               const std::vector<Var>& base, const Key& target) {
  return guessed_info(joint, detail::union_key(base, message_vars), target) -
         guessed_info(joint, Key(base), target);
}

inline double entropy(const JointDistribution& joint, const Key& key) {
  const PairTable t = pair_table(joint, Key{}, key);
  return shannon_entropy(t.values);
}

/// I(x : y) in bits; tiny negative rounding residue is clamped to zero.
inline double mutual_info(const JointDistribution& joint, const Key& x, const Key& y) {
  const PairTable t = pair_table(joint, x, y);
  double mi = 0.0;
  std::vector<double> col(t.cols);
  for (std::size_t j = 0; j < t.cols; ++j) col[j] = t.col_mass(j);
  for (std::size_t i = 0; i < t.rows; ++i) {
    const double pi = t.row_mass(i);
    for (std::size_t j = 0; j < t.cols; ++j) {
      const double pij = t(i, j);
      if (pij > 0.0) mi += pij * std::log2(pij / (pi * col[j]));
    }
  }
  return std::max(0.0, mi);
}

/// -sum_x P(x) log2 max_y P(y | x), in bits.
inline double conditional_min_entropy(const JointDistribution& joint, const Key& given,
                                      const Key& target) {
  detail::require_source(given);
  const PairTable t = pair_table(joint, given, target);
  double h = 0.0;
  for (std::size_t i = 0; i < t.rows; ++i) {
    const double mass = t.row_mass(i);
    if (mass > 0.0) h -= mass * std::log2(t.row_max(i) / mass);
  }
  return std::max(0.0, h);
}

struct ProductBound {
  double lhs = 0.0;  // J(lambda,X -> b)
  double rhs = 0.0;  // J(lambda,X -> B) * J(lambda,X -> B^b)
  bool holds = false;
};

/// Compares J(lambda,X -> b) with J(lambda,X -> B) J(lambda,X -> B^b). The product
/// form can fail when guessing errors for B and B^b are correlated; the additive
/// form J(b) >= J(B) + J(B^b) - 1 always holds.
inline ProductBound product_bound_check(const JointDistribution& joint) {
  const Key lx{Var::lambda, Var::X};
  ProductBound r;
  r.lhs = guessed_info(joint, lx, Key{Var::b});
  r.rhs = guessed_info(joint, lx, Key{Var::B}) * guessed_info(joint, lx, Key::parity(Var::B, Var::b));
  r.holds = r.lhs >= r.rhs - kDefaultTolerance;
  return r;
}

/// Guessed/transmitted information and entropies of one model's joint table.
struct InfoReport {
  double j_lx_to_b = 0.0;
  double j_lx_to_B = 0.0;
  double j_lx_to_BxorB = 0.0;
  double j_l_to_b = 0.0;
  double j_l_to_B = 0.0;
  double delta_x_to_b = 0.0;
  double delta_x_to_B = 0.0;
  double h_X = 0.0;
  double i_X_b = 0.0;
  double i_lambda_ab = 0.0;
  double hmin_b_given_lx = 0.0;
};

inline InfoReport info_report(const JointDistribution& joint) {
  const Key lx{Var::lambda, Var::X};
  const Key l{Var::lambda};
  InfoReport r;
  r.j_lx_to_b = guessed_info(joint, lx, Key{Var::b});
  r.j_lx_to_B = guessed_info(joint, lx, Key{Var::B});
  r.j_lx_to_BxorB = guessed_info(joint, lx, Key::parity(Var::B, Var::b));
  r.j_l_to_b = guessed_info(joint, l, Key{Var::b});
  r.j_l_to_B = guessed_info(joint, l, Key{Var::B});
  r.delta_x_to_b = r.j_lx_to_b - r.j_l_to_b;
  r.delta_x_to_B = r.j_lx_to_B - r.j_l_to_B;
  r.h_X = entropy(joint, Key{Var::X});
  r.i_X_b = mutual_info(joint, Key{Var::X}, Key{Var::b});
  r.i_lambda_ab = mutual_info(joint, l, Key{Var::a, Var::b});
  r.hmin_b_given_lx = conditional_min_entropy(joint, lx, Key{Var::b});
  return r;
}

}  // namespace hvc
