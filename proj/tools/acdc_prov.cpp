// Copyright 2026 The ACDC Provenance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// acdc-prov: command-line front end for provenance policy enforcement.
//
// Exit status: 0 policy satisfied / graph clean / scenario reproduced,
//              1 policy violated / validation failures / scenario mismatch,
//              2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acdc/acdc.hpp"

#ifndef ACDC_DEFAULT_CORPUS_DIR
#define ACDC_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path corpus_dir() {
  if (const char* env = std::getenv("ACDC_CORPUS_DIR"); env && *env) return env;
  return ACDC_DEFAULT_CORPUS_DIR;
}

// Paths that do not exist as given are looked up in the corpus.
fs::path resolve_input(const std::string& arg) {
  fs::path p(arg);
  if (fs::exists(p)) return p;
  if (p.is_relative()) {
    fs::path root = corpus_dir();
    for (const fs::path& dir : {root, root / "graphs", root / "policies", root / "envs",
                               root / "invalid"}) {
      if (fs::exists(dir / p)) return dir / p;
    }
  }
  throw InputError("cannot open '" + arg + "'");
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot open '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write '" + p.string() + "'");
  out << bytes;
}

std::string join_bindings(const acdc::Assignment& a) {
  std::string out;
  for (const auto& [var, id] : a) out += (out.empty() ? "" : ", ") + var + " = " + id;
  return out;
}

// --- check -----------------------------------------------------------------

struct CheckOptions {
  std::string graph;
  std::string policy;
  std::string env;
  std::string slice;
  bool strict = false;
  bool witness = false;
  bool json = false;
};

int run_check(const CheckOptions& o) {
  fs::path graph_path = resolve_input(o.graph);
  fs::path policy_path = resolve_input(o.policy);

  acdc::ProvGraph graph = acdc::load_graph(read_file(graph_path));
  if (!o.slice.empty()) graph = acdc::slice_by_agent(graph, o.slice);

  // Environment: --env, else <policy>.env.json next to the policy, else empty.
  acdc::Environment env;
  if (!o.env.empty()) {
    env = acdc::load_environment(read_file(resolve_input(o.env)));
  } else {
    fs::path companion = policy_path;
    companion.replace_extension(".env.json");
    if (fs::exists(companion)) env = acdc::load_environment(read_file(companion));
  }

  acdc::PolicyAst ast = acdc::parse_policy(read_file(policy_path));
  acdc::BoundPolicy bound =
      acdc::bind(ast, env, o.strict ? acdc::BindMode::Strict : acdc::BindMode::Lenient);
  acdc::Verdict verdict = acdc::evaluate(bound, graph);

  if (o.json) {
    std::cout << acdc::verdict_to_json(verdict);
  } else {
    std::cout << "policy:  " << policy_path.stem().string() << "\n"
              << "graph:   " << graph_path.filename().string();
    if (!o.slice.empty()) std::cout << " (slice " << o.slice << ")";
    std::cout << "\nverdict: " << (verdict.satisfied ? "SATISFIED" : "VIOLATED") << "\n";
    if (o.witness) {
      if (verdict.witness) std::cout << "witness: " << join_bindings(*verdict.witness) << "\n";
      if (verdict.counterexample)
        std::cout << "counterexample: " << join_bindings(*verdict.counterexample) << "\n";
    }
    for (const auto& d : verdict.diagnostics) std::cout << "note:    " << d << "\n";
  }
  return verdict.satisfied ? kOk : kViolated;
}

// --- validate --------------------------------------------------------------

int run_validate(const std::string& graph_arg, bool json) {
  acdc::ProvGraph graph = acdc::load_graph_unchecked(read_file(resolve_input(graph_arg)));
  auto typing = acdc::validate_typing(graph);
  auto cycles = acdc::validate_acyclic(graph);
  bool clean = typing.empty() && cycles.empty();
  if (json) {
    nlohmann::ordered_json out = {{"valid", clean}};
    auto& t = out["typing_violations"] = nlohmann::ordered_json::array();
    for (const auto& v : typing) t.push_back(v.describe());
    out["cycles"] = cycles;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& v : typing) std::cout << "typing violation: " << v.describe() << "\n";
    for (const auto& c : cycles) std::cout << "cycle: " << acdc::describe(c) << "\n";
    std::cout << (clean ? "valid" : "invalid") << ": " << graph.vertex_count() << " vertices, "
              << graph.edge_count() << " edges, " << typing.size() << " typing violation(s), "
              << cycles.size() << " cycle(s)\n";
  }
  return clean ? kOk : kViolated;
}

// --- event -----------------------------------------------------------------

int run_event(const std::string& graph_arg, const std::string& activity) {
  acdc::ProvGraph graph = acdc::load_graph(read_file(resolve_input(graph_arg)));
  std::cout << acdc::save_graph(acdc::extract_event(graph, activity).subgraph);
  return kOk;
}

// --- scenario --------------------------------------------------------------

int run_scenario_cmd(const std::string& name, bool json) {
  auto report = acdc::run_scenario(name);
  if (!report) {
    std::string known;
    for (auto n : acdc::kScenarioNames) known += " " + std::string(n);
    throw InputError("unknown scenario '" + name + "' (known:" + known + ")");
  }
  if (json) {
    nlohmann::ordered_json out = {{"scenario", report->name},
                                  {"reproduced", report->all_match()}};
    auto& rows = out["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : report->rows) {
      rows.push_back({{"graph", r.graph},
                      {"policy", r.policy},
                      {"expected", r.expected},
                      {"actual", r.actual}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t gw = 5, pw = 6;
    for (const auto& r : report->rows) {
      gw = std::max(gw, r.graph.size());
      pw = std::max(pw, r.policy.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    std::cout << "scenario: " << report->name << "\n"
              << pad("graph", gw) << "  " << pad("policy", pw) << "  expected  actual\n";
    for (const auto& r : report->rows) {
      std::cout << pad(r.graph, gw) << "  " << pad(r.policy, pw) << "  " << pad(b(r.expected), 8)
                << "  " << pad(b(r.actual), 6) << (r.matches() ? "  ok" : "  MISMATCH") << "\n";
    }
    std::cout << "outcome: "
              << (report->all_match() ? report->conclusion
                                      : std::string("not reproduced"))
              << "\n";
  }
  return report->all_match() ? kOk : kViolated;
}

// --- export-corpus ---------------------------------------------------------

int run_export(const std::string& dir_arg) {
  fs::path root(dir_arg);
  fs::create_directories(root / "graphs");
  fs::create_directories(root / "policies");
  fs::create_directories(root / "envs");
  fs::create_directories(root / "invalid");
  for (const auto& [name, graph] : acdc::corpus_graphs())
    write_file(root / "graphs" / (name + ".json"), acdc::save_graph(graph));
  for (const auto& [name, graph] : acdc::invalid_corpus_graphs())
    write_file(root / "invalid" / (name + ".json"), acdc::save_graph(graph));
  for (const auto& p : acdc::corpus()) {
    write_file(root / "policies" / (p.name + ".pol"), p.source);
    write_file(root / "policies" / (p.name + ".env.json"), acdc::save_environment(p.default_env));
  }
  acdc::Environment felons;
  felons.sets["blacklist"] = {"Bob"};
  write_file(root / "envs" / "felons.env.json", acdc::save_environment(felons));
  std::cout << "corpus written to " << root.string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Provenance policy checks over ACDC provenance graphs"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate a policy on a graph");
  check_cmd->add_option("graph", check.graph, "Graph document (.json)")->required();
  check_cmd->add_option("policy", check.policy, "Policy file (.pol)")->required();
  check_cmd->add_option("env,--env", check.env, "Environment document (.json)");
  check_cmd->add_flag("--strict", check.strict, "Unresolved names are an input error");
  check_cmd->add_flag("--witness", check.witness, "Print witness / counterexample bindings");
  check_cmd->add_option("--slice", check.slice, "Evaluate on the slice of this account agent");
  check_cmd->add_flag("--json", check.json, "Emit the verdict as JSON");

  std::string validate_graph;
  bool validate_json = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check relation typing and acyclicity");
  validate_cmd->add_option("graph", validate_graph, "Graph document (.json)")->required();
  validate_cmd->add_flag("--json", validate_json, "Emit the report as JSON");

  std::string event_graph, event_activity;
  auto* event_cmd = app.add_subcommand("event", "Print the event subgraph of an activity");
  event_cmd->add_option("graph", event_graph, "Graph document (.json)")->required();
  event_cmd->add_option("--activity", event_activity, "Activity id")->required();

  std::string scenario_name;
  bool scenario_json = false;
  auto* scenario_cmd = app.add_subcommand("scenario", "Run a built-in case-study scenario");
  scenario_cmd->add_option("name", scenario_name,
                           "encapsulate | duplicate-vote | blacklist | manipulation")
      ->required();
  scenario_cmd->add_flag("--json", scenario_json, "Emit the table as JSON");

  std::string export_dir;
  auto* export_cmd = app.add_subcommand("export-corpus", "Write corpus graphs and policies");
  export_cmd->add_option("dir", export_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check_cmd) return run_check(check);
    if (*validate_cmd) return run_validate(validate_graph, validate_json);
    if (*event_cmd) return run_event(event_graph, event_activity);
    if (*scenario_cmd) return run_scenario_cmd(scenario_name, scenario_json);
    if (*export_cmd) return run_export(export_dir);
  } catch (const acdc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
