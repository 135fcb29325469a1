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
#include <istream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hvc/model.hpp"

namespace hvc {

using Json = nlohmann::ordered_json;

/// The input is not a well-formed model document.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// The document parsed but describes an invalid model.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : std::runtime_error(summary(violations)), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string summary(const std::vector<Violation>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x.path + ": " + x.message;
    return s;
  }
  std::vector<Violation> violations_;
};

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace json_detail {

inline void write(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& x : j) flat = flat && !x.is_structured();
      out += '[';
      bool first = true;
      for (const auto& x : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(out, x, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace json_detail

/// Serializes with every floating-point number printed to 17 significant digits.
inline std::string dump_json(const Json& j, int indent = 2) {
  std::string out;
  json_detail::write(out, j, indent, 0);
  return out;
}

namespace json_detail {

inline std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw ParseError(path.empty() ? key : path + "." + key, "missing key");
  return obj.at(key);
}

inline std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

inline Row numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of numbers");
  Row out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ParseError(at(path, i), "expected a number");
    out.push_back(j[i].get<double>());
  }
  return out;
}

inline std::vector<Row> rows(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  std::vector<Row> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(numbers(j[i], at(path, i)));
  return out;
}

inline Table2<Row> table2(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  Table2<Row> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rows(j[i], at(path, i)));
  return out;
}

inline Table3<Row> table3(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  Table3<Row> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(table2(j[i], at(path, i)));
  return out;
}

}  // namespace json_detail

/// Builds a model from a model document. Throws ParseError naming the JSON path of
/// the first malformed element; normalization is not checked here.
inline HvcModel model_from_json(const Json& doc) {
  using namespace json_detail;
  if (!doc.is_object()) throw ParseError("$", "expected a JSON object");
  HvcModel m;

  const Json& lambda = member(doc, "lambda", "");
  if (!lambda.is_object()) throw ParseError("lambda", "expected an object");
  const Json& card = member(lambda, "cardinality", "lambda");
  if (!card.is_number_integer() || card.get<long long>() < 1) {
    throw ParseError("lambda.cardinality", "expected a positive integer");
  }
  m.lambda_prior = FiniteDistribution::from_probs(numbers(member(lambda, "probs", "lambda"), "lambda.probs"));

  if (doc.contains("settings")) {
    const Json& s = doc.at("settings");
    if (!s.is_object()) throw ParseError("settings", "expected an object");
    if (s.contains("alice_probs"))
      m.alice_settings = FiniteDistribution::from_probs(numbers(s.at("alice_probs"), "settings.alice_probs"));
    if (s.contains("bob_probs"))
      m.bob_settings = FiniteDistribution::from_probs(numbers(s.at("bob_probs"), "settings.bob_probs"));
    if (s.contains("given_lambda")) m.settings_given_lambda = rows(s.at("given_lambda"), "settings.given_lambda");
  }

  m.bob_outcome = table2(member(doc, "bob_outcome", ""), "bob_outcome");
  m.message = table3(member(doc, "message", ""), "message");

  const Json& alice = member(doc, "alice", "");
  if (alice.is_string()) {
    if (alice.get<std::string>() != "optimal") throw ParseError("alice", "expected \"optimal\" or a table");
    m.alice = OptimalAlice{};
  } else {
    m.alice = table3(alice, "alice");
  }

  if (doc.contains("meta")) {
    const Json& meta = doc.at("meta");
    if (!meta.is_object()) throw ParseError("meta", "expected an object");
    if (meta.contains("name")) {
      if (!meta.at("name").is_string()) throw ParseError("meta.name", "expected a string");
      m.name = meta.at("name").get<std::string>();
    }
    if (meta.contains("notes")) {
      if (!meta.at("notes").is_string()) throw ParseError("meta.notes", "expected a string");
      m.notes = meta.at("notes").get<std::string>();
    }
  }
  return m;
}

/// validate_model plus the document-level cardinality check.
inline std::vector<Violation> validate_model_document(const Json& doc, const HvcModel& m) {
  std::vector<Violation> out;
  const auto declared = doc.at("lambda").at("cardinality").get<long long>();
  if (static_cast<std::size_t>(declared) != m.lambda_prior.size()) {
    out.push_back({"lambda.cardinality", "declares " + std::to_string(declared) + " values but probs has " +
                                             std::to_string(m.lambda_prior.size())});
  }
  for (auto& v : validate_model(m)) out.push_back(std::move(v));
  return out;
}

/// Parses and validates; throws ParseError or ValidationError.
inline HvcModel load_model(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("$", e.what());
  }
  HvcModel m = model_from_json(doc);
  auto violations = validate_model_document(doc, m);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return m;
}

inline HvcModel load_model(std::istream& in) {
  return load_model(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

inline Json model_to_json(const HvcModel& m) {
  Json doc;
  doc["lambda"] = {{"cardinality", m.num_lambda()}, {"probs", m.lambda_prior.probs}};
  Json settings = {{"alice_probs", m.alice_settings.probs}, {"bob_probs", m.bob_settings.probs}};
  if (m.settings_given_lambda) settings["given_lambda"] = *m.settings_given_lambda;
  doc["settings"] = settings;
  doc["bob_outcome"] = m.bob_outcome;
  doc["message"] = m.message;
  if (m.has_optimal_alice()) {
    doc["alice"] = "optimal";
  } else {
    doc["alice"] = m.alice_table();
  }
  doc["meta"] = {{"name", m.name}, {"notes", m.notes}};
  return doc;
}

inline std::string export_model(const HvcModel& m) { return dump_json(model_to_json(m)) + "\n"; }

}  // namespace hvc
