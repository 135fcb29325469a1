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

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "hvc/evaluate.hpp"
#include "hvc/json_io.hpp"
#include "hvc/ledger.hpp"
#include "hvc/search.hpp"
#include "hvc/toner_bacon.hpp"

// JSON / CSV / text renderings used by the command-line tool.
namespace hvc::report {

inline Json to_json(const ChshReport& r) {
  return {{"variant", r.variant},
          {"win_probs", {{r.win_probs[0][0], r.win_probs[0][1]}, {r.win_probs[1][0], r.win_probs[1][1]}}},
          {"score", r.score},
          {"ichsh_lhs", r.ichsh_lhs},
          {"local_bound", r.local_bound},
          {"tsirelson", r.tsirelson}};
}

inline Json to_json(const InfoReport& i) {
  return {{"j_lx_to_b", i.j_lx_to_b},
          {"j_lx_to_B", i.j_lx_to_B},
          {"j_lx_to_BxorB", i.j_lx_to_BxorB},
          {"j_l_to_b", i.j_l_to_b},
          {"j_l_to_B", i.j_l_to_B},
          {"delta_x_to_b", i.delta_x_to_b},
          {"delta_x_to_B", i.delta_x_to_B},
          {"h_X_bits", i.h_X},
          {"i_X_b_bits", i.i_X_b},
          {"i_lambda_ab_bits", i.i_lambda_ab},
          {"hmin_b_given_lx_bits", i.hmin_b_given_lx}};
}

inline Json to_json(const ConditionFlag& f) { return {{"value", f.value}, {"holds", f.holds}}; }

inline Json to_json(const IndependenceCheck& c) {
  return {{"holds", c.holds},
          {"max_deviation", c.max_deviation},
          {"alice_deviation", c.alice_deviation},
          {"bob_deviation", c.bob_deviation}};
}

inline Json to_json(const ConditionProfile& p) {
  Json rows = Json::array();
  for (const ConditionRow& row : condition_rows()) {
    const ConditionFlag f = condition_row(p, row.number);
    rows.push_back({{"row", row.number},
                    {"condition", row.condition},
                    {"value", f.value},
                    {"satisfied", f.holds},
                    {"violation_possible", violation_label(row.expected)}});
  }
  return {{"j_lx_b_is_half", to_json(p.j_lx_b_is_half)},
          {"j_lx_B_is_half", to_json(p.j_lx_B_is_half)},
          {"j_l_b_is_half", to_json(p.j_l_b_is_half)},
          {"j_l_B_is_half", to_json(p.j_l_B_is_half)},
          {"delta_b_is_zero", to_json(p.delta_b_is_zero)},
          {"delta_B_is_zero", to_json(p.delta_B_is_zero)},
          {"si", to_json(p.si)},
          {"oi", to_json(p.oi)},
          {"freedom",
           {{"holds", p.freedom.holds},
            {"i_lambda_settings_bits", p.freedom.i_lambda_settings},
            {"j_lambda_settings", p.freedom.j_lambda_settings}}},
          {"setting_given_outcome_deviation", p.setting_given_outcome_deviation},
          {"chsh_max", p.chsh_max},
          {"chsh_max_variant", p.chsh_max_variant},
          {"rows", rows}};
}

inline Json evaluation_json(const Evaluation& e) {
  Json variants = Json::array();
  for (const auto& r : e.variants) variants.push_back(to_json(r));
  Json doc;
  doc["model"] = e.model_name;
  doc["alice"] = e.alice_optimal ? "optimal" : "explicit";
  doc["settings_free"] = e.settings_free;
  doc["chsh_score"] = e.chsh.score;
  doc["chsh_max"] = e.profile.chsh_max;
  doc["chsh_max_variant"] = e.profile.chsh_max_variant;
  doc["h_X_bits"] = e.info.h_X;
  doc["i_X_b_bits"] = e.info.i_X_b;
  doc["delta_x_to_B"] = e.info.delta_x_to_B;
  doc["delta_x_to_b"] = e.info.delta_x_to_b;
  doc["info"] = to_json(e.info);
  doc["chsh"] = variants;
  doc["product_bound"] = {{"lhs", e.product.lhs}, {"rhs", e.product.rhs}, {"holds", e.product.holds}};
  doc["conditions"] = to_json(e.profile);
  doc["notes"] = Json::array(
      {"h_X_bits is the entropy of the message X; i_X_b_bits is the mutual information between X "
       "and Bob's setting b. They coincide only when X is a function of b.",
       "chsh_score uses the model's Alice strategy on variant 0; chsh_max uses the optimal strategy "
       "over all eight variants."});
  return doc;
}

inline std::string evaluation_csv(const Evaluation& e, double tol) {
  std::ostringstream os;
  os << "name,value,bound,verdict\n";
  const auto row = [&](const std::string& name, double value, const std::string& bound,
                       const std::string& verdict) {
    os << name << ',' << format_double(value) << ',' << bound << ',' << verdict << '\n';
  };
  const auto bound_verdict = [](double v) {
    return v > kLocalBound + kDefaultTolerance ? "violates" : "within_bound";
  };
  row("chsh_score", e.chsh.score, "0.75", bound_verdict(e.chsh.score));
  for (const auto& r : e.variants) {
    row("chsh_variant_" + std::to_string(r.variant), r.score, "0.75", bound_verdict(r.score));
  }
  row("chsh_max", e.profile.chsh_max, "0.75", bound_verdict(e.profile.chsh_max));
  row("ichsh_lhs", e.chsh.ichsh_lhs, "0.75", bound_verdict(e.chsh.ichsh_lhs));
  const auto half = [&](const std::string& name, double v) {
    row(name, v, "0.5", std::abs(v - 0.5) <= tol ? "equal" : "above");
  };
  half("j_lx_to_b", e.info.j_lx_to_b);
  half("j_lx_to_B", e.info.j_lx_to_B);
  half("j_lx_to_BxorB", e.info.j_lx_to_BxorB);
  half("j_l_to_b", e.info.j_l_to_b);
  half("j_l_to_B", e.info.j_l_to_B);
  const auto zero = [&](const std::string& name, double v) {
    row(name, v, "0", std::abs(v) <= tol ? "zero" : "positive");
  };
  zero("delta_x_to_b", e.info.delta_x_to_b);
  zero("delta_x_to_B", e.info.delta_x_to_B);
  row("h_X_bits", e.info.h_X, "", "");
  row("i_X_b_bits", e.info.i_X_b, "", "");
  row("i_lambda_ab_bits", e.info.i_lambda_ab, "", "");
  row("hmin_b_given_lx_bits", e.info.hmin_b_given_lx, "", "");
  row("product_bound_lhs", e.product.lhs, format_double(e.product.rhs), e.product.holds ? "holds" : "fails");
  const std::string t = format_double(tol);
  row("si_max_deviation", e.profile.si.max_deviation, t, e.profile.si.holds ? "holds" : "violated");
  row("oi_max_deviation", e.profile.oi.max_deviation, t, e.profile.oi.holds ? "holds" : "violated");
  row("freedom_i_lambda_settings_bits", e.profile.freedom.i_lambda_settings, "1e-12",
      e.profile.freedom.holds ? "holds" : "violated");
  return os.str();
}

/// Text table in the ledger's row order.
inline std::string conditions_table(const std::string& model_name, const ConditionProfile& p) {
  std::ostringstream os;
  char line[256];
  os << "model: " << model_name << "\n";
  std::snprintf(line, sizeof line, "%-4s %-40s %-22s %-10s %s\n", "row", "condition", "value",
                "satisfied", "violation possible");
  os << line;
  for (const ConditionRow& row : condition_rows()) {
    const ConditionFlag f = condition_row(p, row.number);
    std::snprintf(line, sizeof line, "%-4d %-40s %-22s %-10s %s\n", row.number,
                  std::string(row.condition).c_str(), format_double(f.value).c_str(),
                  f.holds ? "yes" : "no", std::string(violation_label(row.expected)).c_str());
    os << line;
  }
  os << "chsh_max: " << format_double(p.chsh_max) << " (variant " << p.chsh_max_variant << ")"
     << (p.violates_chsh() ? "  violates the local bound 0.75" : "  within the local bound 0.75") << "\n";
  os << "freedom of choice: " << (p.freedom.holds ? "holds" : "violated") << "\n";
  return os.str();
}

inline std::string ledger_table(const ConditionLedger& l) {
  std::ostringstream os;
  char line[320];
  std::snprintf(line, sizeof line, "%-4s %-40s %-9s %-13s %-10s %s\n", "row", "condition", "expected",
                "derived", "match", "evidence");
  os << line;
  for (const auto& r : l.rows) {
    std::snprintf(line, sizeof line, "%-4d %-40s %-9s %-13s %-10s %s\n", r.number, r.condition.c_str(),
                  std::string(violation_label(r.expected)).c_str(), r.derived.c_str(),
                  r.reproduced ? "yes" : "NO", r.evidence.c_str());
    os << line;
  }
  os << "rows 4 and 6 never both hold in a violating model: " << (l.starred_exclusive ? "yes" : "no") << "\n";
  os << "rows 7 and 8 never both hold in a violating model: " << (l.double_starred_exclusive ? "yes" : "no")
     << "\n";
  os << "pattern reproduced: " << (l.reproduced ? "yes" : "no") << "\n";
  return os.str();
}

inline Json ledger_json(const ConditionLedger& l) {
  Json rows = Json::array();
  for (const auto& r : l.rows) {
    rows.push_back({{"row", r.number},
                    {"condition", r.condition},
                    {"expected", violation_label(r.expected)},
                    {"derived", r.derived},
                    {"reproduced", r.reproduced},
                    {"evidence", r.evidence}});
  }
  return {{"rows", rows},
          {"starred_exclusive", l.starred_exclusive},
          {"double_starred_exclusive", l.double_starred_exclusive},
          {"reproduced", l.reproduced}};
}

inline Json to_json(const tb::Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

inline Json tb_estimate_json(const tb::Config& cfg, const tb::Estimate& e) {
  const auto& c = e.tally.counts;
  const double expected = -tb::dot(cfg.a_vec, cfg.b_vec);
  return {{"a_vec", to_json(cfg.a_vec)},
          {"b_vec", to_json(cfg.b_vec)},
          {"rounds", e.rounds_used()},
          {"seed", e.seed},
          {"chunks", e.chunks},
          {"correlator", e.correlator},
          {"stderr", e.std_error},
          {"interval_3sigma", Json::array({e.correlator - 3.0 * e.std_error, e.correlator + 3.0 * e.std_error})},
          {"singlet_expectation", expected},
          {"counts", {{"A0B0", c[0][0]}, {"A0B1", c[0][1]}, {"A1B0", c[1][0]}, {"A1B1", c[1][1]}}},
          {"x_plus", e.tally.x_plus},
          {"x_minus", e.tally.rounds - e.tally.x_plus}};
}

inline Json tb_chsh_json(const tb::ChshSettings& s, const tb::ChshEstimate& e) {
  return {{"settings",
           {{"a0", to_json(s[0])}, {"a1", to_json(s[1])}, {"b0", to_json(s[2])}, {"b1", to_json(s[3])}}},
          {"rounds", e.rounds_used},
          {"seed", e.seed},
          {"variant", e.variant},
          {"score", e.score},
          {"stderr", e.std_error},
          {"interval_3sigma", Json::array({e.score - 3.0 * e.std_error, e.score + 3.0 * e.std_error})},
          {"win_probs", {{e.win_probs[0][0], e.win_probs[0][1]}, {e.win_probs[1][0], e.win_probs[1][1]}}},
          {"correlators",
           {{e.correlators[0][0], e.correlators[0][1]}, {e.correlators[1][0], e.correlators[1][1]}}},
          {"tsirelson", kTsirelson}};
}

inline Json tb_entropy_json(const tb::EntropyEstimate& e) {
  return {{"method", tb::method_name(e.method)},
          {"resolution", e.resolution},
          {"bits", e.bits},
          {"stderr", e.std_error}};
}

inline Json search_json(const SearchConfig& cfg, const SearchResult& r) {
  return {{"config",
           {{"constraint", constraint_name(cfg.constraint)},
            {"L", cfg.num_lambda},
            {"M", cfg.num_messages},
            {"restarts", cfg.restarts},
            {"steps", cfg.steps_per_restart},
            {"step_size", cfg.step_size},
            {"seed", cfg.seed}}},
          {"best_score", r.best_score},
          {"best_variant", r.best_variant},
          {"best_restart", r.best_restart},
          {"local_bound", kLocalBound},
          {"exceeds_local_bound", r.best_score > kLocalBound + kDefaultTolerance},
          {"trajectory", r.trajectory},
          {"profile", to_json(r.profile)},
          {"best_model", model_to_json(r.best_model)}};
}

}  // namespace hvc::report
