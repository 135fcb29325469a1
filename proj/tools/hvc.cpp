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

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hvc/hvc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLedgerMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitUsage = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_variants(const std::string& spec) {
  if (spec == "all") {
    std::vector<int> all;
    for (int v = 0; v < hvc::kNumVariants; ++v) all.push_back(v);
    return all;
  }
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0 || v >= hvc::kNumVariants) {
      throw UsageError("--variant expects 'all' or integers in 0..7, got '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--variant is empty");
  return out;
}

hvc::tb::Vec3 vec3(const hvc::Json& doc, const std::string& key) {
  if (!doc.contains(key)) throw hvc::ParseError(key, "missing key");
  const hvc::Json& v = doc.at(key);
  if (!v.is_array() || v.size() != 3) throw hvc::ParseError(key, "expected an array of 3 numbers");
  hvc::tb::Vec3 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!v[i].is_number()) throw hvc::ParseError(key + "[" + std::to_string(i) + "]", "expected a number");
    out[i] = v[i].get<double>();
  }
  return out;
}

hvc::tb::ChshSettings load_settings(const std::string& path) {
  hvc::Json doc;
  try {
    doc = hvc::Json::parse(read_input(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw hvc::ParseError("$", e.what());
  }
  if (!doc.is_object()) throw hvc::ParseError("$", "expected a JSON object");
  hvc::tb::ChshSettings s{vec3(doc, "a0"), vec3(doc, "a1"), vec3(doc, "b0"), vec3(doc, "b1")};
  std::vector<hvc::Violation> bad;
  const char* names[] = {"a0", "a1", "b0", "b1"};
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(hvc::tb::norm(s[i]) - 1.0) > 1e-9) bad.push_back({names[i], "not a unit vector"});
  }
  if (!bad.empty()) throw hvc::ValidationError(bad);
  return s;
}

void print_json(const hvc::Json& j) { std::cout << hvc::dump_json(j) << "\n"; }

struct EvaluateArgs {
  std::string path;
  std::string variant = "0";
  std::string format = "json";
  double tol = hvc::kDefaultTolerance;
};

int run_evaluate(const EvaluateArgs& args) {
  const std::vector<int> variants = parse_variants(args.variant);
  const hvc::HvcModel model = hvc::load_model(read_input(args.path));
  const hvc::Evaluation e = hvc::evaluate(model, variants, args.tol);
  if (args.format == "csv") {
    std::cout << hvc::report::evaluation_csv(e, args.tol);
  } else {
    print_json(hvc::report::evaluation_json(e));
  }
  return kExitOk;
}

struct ConditionsArgs {
  std::string path;
  std::string format = "text";
  bool ledger = false;
  double tol = hvc::kDefaultTolerance;
  std::size_t suite_models = 1000;
  std::uint64_t seed = 2024;
};

int run_conditions(const ConditionsArgs& args) {
  if (args.ledger) {
    const hvc::ConditionLedger ledger = hvc::default_condition_ledger(args.suite_models, args.seed);
    if (args.format == "json") {
      print_json(hvc::report::ledger_json(ledger));
    } else {
      std::cout << hvc::report::ledger_table(ledger);
    }
    return ledger.reproduced ? kExitOk : kExitLedgerMismatch;
  }
  if (args.path.empty()) throw UsageError("conditions needs a model path or --ledger");
  const hvc::HvcModel model = hvc::load_model(read_input(args.path));
  const hvc::ConditionProfile p = hvc::table1_profile(model, args.tol);
  if (args.format == "json") {
    hvc::Json doc;
    doc["model"] = model.name;
    doc["conditions"] = hvc::report::to_json(p);
    print_json(doc);
  } else {
    std::cout << hvc::report::conditions_table(model.name, p);
  }
  return kExitOk;
}

struct TbArgs {
  std::uint64_t rounds = 1'000'000;
  std::uint64_t seed = 1;
  double angle_deg = 0.0;
  std::size_t chunks = 1;
  std::size_t threads = 0;
  std::string settings;
  bool chsh = false;
  std::string entropy;
  std::uint64_t resolution = 0;
};

int run_tb(const TbArgs& args) {
  if (!args.entropy.empty()) {
    hvc::tb::EntropyMethod m;
    if (args.entropy == "quadrature") {
      m = hvc::tb::EntropyMethod::kQuadrature;
    } else if (args.entropy == "mc" || args.entropy == "monte_carlo") {
      m = hvc::tb::EntropyMethod::kMonteCarlo;
    } else {
      throw UsageError("--message-entropy expects quadrature or mc");
    }
    const std::uint64_t res = args.resolution ? args.resolution
                                              : (m == hvc::tb::EntropyMethod::kQuadrature ? 10'000 : 1'000'000);
    hvc::Json doc = hvc::report::tb_entropy_json(hvc::tb::message_entropy(m, res, args.seed));
    doc["seed"] = args.seed;
    print_json(doc);
    return kExitOk;
  }
  if (args.rounds < 4) throw UsageError("--rounds must be at least 4");
  if (!args.settings.empty() || args.chsh) {
    const hvc::tb::ChshSettings s =
        args.settings.empty() ? hvc::tb::optimal_chsh_settings() : load_settings(args.settings);
    print_json(hvc::report::tb_chsh_json(s, hvc::tb::chsh(s, args.rounds, args.seed, args.chunks, args.threads)));
    return kExitOk;
  }
  hvc::tb::Config cfg;
  cfg.a_vec = hvc::tb::in_plane(0.0);
  cfg.b_vec = hvc::tb::in_plane(args.angle_deg);
  cfg.rounds = args.rounds;
  cfg.seed = args.seed;
  cfg.chunks = args.chunks;
  cfg.threads = args.threads;
  print_json(hvc::report::tb_estimate_json(cfg, hvc::tb::correlator(cfg)));
  return kExitOk;
}

struct SearchArgs {
  std::string constraint = "none";
  hvc::SearchConfig cfg;
};

int run_search(SearchArgs args) {
  args.cfg.constraint = hvc::parse_constraint(args.constraint);
  const hvc::SearchResult r = hvc::hill_climb(args.cfg);
  print_json(hvc::report::search_json(args.cfg, r));
  return kExitOk;
}

int run_zoo_list() {
  for (const auto& name : hvc::zoo_list()) {
    std::cout << name << "\t" << hvc::zoo_get(name).description << "\n";
  }
  return kExitOk;
}

int run_zoo_export(const std::string& name, const std::string& path) {
  const std::string text = hvc::export_model(hvc::zoo_get(name).model);
  if (path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of finite hidden-variable models with one-way communication"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "information measures, CHSH scores and conditions of a model");
  evaluate->add_option("path", ev.path, "model file, or - for stdin")->required();
  evaluate->add_option("--variant", ev.variant, "all, or a comma-separated list of variants 0..7");
  evaluate->add_option("--format", ev.format)->check(CLI::IsMember({"json", "csv"}));
  evaluate->add_option("--tol", ev.tol, "tolerance for condition verdicts")->check(CLI::PositiveNumber);

  ConditionsArgs co;
  auto* conditions = app.add_subcommand("conditions", "the eight-row condition table for a model");
  conditions->add_option("path", co.path, "model file, or - for stdin");
  conditions->add_flag("--ledger", co.ledger, "rebuild the Yes/No column from witnesses and property suites");
  conditions->add_option("--format", co.format)->check(CLI::IsMember({"text", "json"}));
  conditions->add_option("--tol", co.tol)->check(CLI::PositiveNumber);
  conditions->add_option("--suite-models", co.suite_models, "models per property suite")->check(CLI::PositiveNumber);
  conditions->add_option("--seed", co.seed);

  TbArgs tb;
  auto* tbc = app.add_subcommand("tb", "Monte Carlo simulation of the sphere protocol");
  tbc->add_option("--rounds", tb.rounds);
  tbc->add_option("--seed", tb.seed);
  tbc->add_option("--angle-deg", tb.angle_deg, "angle between Alice's and Bob's settings");
  tbc->add_option("--chunks", tb.chunks)->check(CLI::PositiveNumber);
  tbc->add_option("--threads", tb.threads, "0 = all cores; does not change results");
  tbc->add_option("--settings", tb.settings, "JSON file with unit vectors a0, a1, b0, b1");
  tbc->add_flag("--chsh", tb.chsh, "CHSH score at the optimal coplanar settings");
  tbc->add_option("--message-entropy", tb.entropy, "quadrature or mc");
  tbc->add_option("--resolution", tb.resolution, "quadrature nodes or Monte Carlo samples");

  SearchArgs se;
  auto* search = app.add_subcommand("search", "random-restart hill climbing for CHSH-maximizing models");
  search->add_option("--constraint", se.constraint)
      ->check(CLI::IsMember({"none", "message_independent_of_b", "outcome_uninformative", "delta_b_zero_structural"}));
  search->add_option("--L", se.cfg.num_lambda)->check(CLI::PositiveNumber);
  search->add_option("--M", se.cfg.num_messages)->check(CLI::PositiveNumber);
  search->add_option("--restarts", se.cfg.restarts)->check(CLI::PositiveNumber);
  search->add_option("--steps", se.cfg.steps_per_restart)->check(CLI::PositiveNumber);
  search->add_option("--seed", se.cfg.seed);
  search->add_option("--step-size", se.cfg.step_size)->check(CLI::Range(1e-12, 1.0));
  search->add_option("--threads", se.cfg.threads, "0 = all cores; does not change results");

  auto* zoo = app.add_subcommand("zoo", "built-in models");
  zoo->require_subcommand(1);
  zoo->add_subcommand("list", "names and descriptions");
  std::string zoo_name, zoo_path;
  auto* zoo_export = zoo->add_subcommand("export", "write a built-in model in the model file format");
  zoo_export->add_option("name", zoo_name)->required();
  zoo_export->add_option("path", zoo_path, "output file, or - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*evaluate) return run_evaluate(ev);
    if (*conditions) return run_conditions(co);
    if (*tbc) return run_tb(tb);
    if (*search) return run_search(se);
    if (zoo->got_subcommand("list")) return run_zoo_list();
    if (*zoo_export) return run_zoo_export(zoo_name, zoo_path);
  } catch (const hvc::ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kExitParse;
  } catch (const hvc::ValidationError& e) {
    std::cerr << "invalid model:\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v.path << ": " << v.message << "\n";
    return kExitValidation;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hvc::Error& e) {
    std::cerr << "error [" << hvc::error_code_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == hvc::ErrorCode::kUnknownModel ? kExitUsage : kExitValidation;
  }
  return kExitUsage;
}
