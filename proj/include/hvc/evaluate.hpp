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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hvc/chsh.hpp"
#include "hvc/conditions.hpp"
#include "hvc/info.hpp"
#include "hvc/joint.hpp"
#include "hvc/model.hpp"

namespace hvc {

/// Everything the evaluate command reports for one model.
struct Evaluation {
  std::string model_name;
  bool alice_optimal = false;
  bool settings_free = true;
  InfoReport info;
  ProductBound product;
  ChshReport chsh;                   // variant 0, with the model's own Alice
  std::vector<ChshReport> variants;  // as requested
  ConditionProfile profile;
};

/// `variants` lists the CHSH variants to report (empty = only variant 0). With the
/// OPTIMAL sentinel, each variant is scored with the strategy optimal for it.
inline Evaluation evaluate(const HvcModel& model, const std::vector<int>& variants = {},
                           double tol = kDefaultTolerance) {
  Evaluation e;
  e.model_name = model.name;
  e.alice_optimal = model.has_optimal_alice();
  e.settings_free = model.settings_free();

  const auto score_variant = [&](int v) {
    if (model.has_optimal_alice()) return optimal_alice(model, v).report;
    return chsh_score(enumerate_joint(model), v);
  };

  const JointDistribution joint = enumerate_joint(resolve_alice(model, 0));
  e.info = info_report(joint);
  e.product = product_bound_check(joint);
  e.chsh = score_variant(0);
  for (int v : variants) e.variants.push_back(v == 0 ? e.chsh : score_variant(v));
  e.profile = table1_profile(model, tol);
  return e;
}

/// Named scalar of an evaluation; booleans map to 1 / 0. Unknown names give nullopt.
inline std::optional<double> lookup(const Evaluation& e, std::string_view q) {
  const auto b = [](bool v) { return v ? 1.0 : 0.0; };
  const InfoReport& i = e.info;
  const ConditionProfile& p = e.profile;
  if (q == "chsh_score") return e.chsh.score;
  if (q == "ichsh_lhs") return e.chsh.ichsh_lhs;
  if (q == "chsh_max") return p.chsh_max;
  if (q == "j_lx_to_b") return i.j_lx_to_b;
  if (q == "j_lx_to_B") return i.j_lx_to_B;
  if (q == "j_lx_to_BxorB") return i.j_lx_to_BxorB;
  if (q == "j_l_to_b") return i.j_l_to_b;
  if (q == "j_l_to_B") return i.j_l_to_B;
  if (q == "delta_x_to_b") return i.delta_x_to_b;
  if (q == "delta_x_to_B") return i.delta_x_to_B;
  if (q == "h_X") return i.h_X;
  if (q == "i_X_b") return i.i_X_b;
  if (q == "i_lambda_ab") return i.i_lambda_ab;
  if (q == "hmin_b_given_lx") return i.hmin_b_given_lx;
  if (q == "si_holds") return b(p.si.holds);
  if (q == "oi_holds") return b(p.oi.holds);
  if (q == "freedom_holds") return b(p.freedom.holds);
  if (q == "j_lambda_settings") return p.freedom.j_lambda_settings;
  if (q == "product_bound_holds") return b(e.product.holds);
  return std::nullopt;
}

}  // namespace hvc
