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

/// @file scenario_report.hpp
/// Runs the named case-study scenarios and tabulates policy outcomes
/// against the outcome each scenario is expected to show.

#ifndef ACDC_SCENARIO_REPORT_HPP
#define ACDC_SCENARIO_REPORT_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acdc/error.hpp"
#include "acdc/evaluator.hpp"
#include "acdc/prov_ops.hpp"
#include "acdc/scenarios.hpp"

namespace acdc {

struct ScenarioRow {
  std::string graph;   // how the evaluated graph was obtained
  std::string policy;  // corpus policy name
  bool expected;
  bool actual;

  bool matches() const { return expected == actual; }
};

struct ScenarioReport {
  std::string name;
  std::vector<ScenarioRow> rows;
  std::string conclusion;

  bool all_match() const {
    for (const auto& r : rows)
      if (!r.matches()) return false;
    return true;
  }
};

inline constexpr std::array<std::string_view, 4> kScenarioNames = {
    "encapsulate", "duplicate-vote", "blacklist", "manipulation"};

namespace detail {

inline ScenarioRow run_row(std::string graph_label, const ProvGraph& graph,
                           const std::string& policy, bool expected,
                           const std::optional<Environment>& env = std::nullopt) {
  auto entry = corpus_policy(policy);
  BoundPolicy bound = env ? entry->bound(*env) : entry->bound();
  return {std::move(graph_label), policy, expected, evaluate(bound, graph).satisfied};
}

}  // namespace detail

/// Evaluates the scenario's policies on freshly built graphs; std::nullopt
/// for an unknown scenario name.
inline std::optional<ScenarioReport> run_scenario(std::string_view name) {
  ScenarioReport rep;
  rep.name = std::string(name);
  using detail::run_row;

  if (name == "encapsulate") {
    const ProvGraph bob = build_encapsulate_event("Bob");
    for (int i = 1; i <= 9; ++i)
      rep.rows.push_back(run_row("fig2", bob, "p" + std::to_string(i), true));
    rep.rows.push_back(run_row("fig2", bob, "encapsulate_all", true));

    const ProvGraph foreign = inject_foreign_material(bob, "Mallory");
    for (auto [p, want] : {std::pair{"p1", true}, {"p2", true}, {"p3", false}, {"p4", false}})
      rep.rows.push_back(run_row("fig2_foreign_inputs", foreign, p, want));

    const ProvGraph derived = inject_foreign_material(
        bob, "Mallory", {.key = true, .data = true, .as_input = true, .as_derivation = true});
    for (auto [p, want] : {std::pair{"p5", true}, {"p6", true}, {"p7", false}, {"p8", false}})
      rep.rows.push_back(run_row("fig2_foreign_derivation", derived, p, want));
    rep.conclusion =
        "capsule accepted for Bob; foreign key/data pass p1,p2 but fail p3,p4 (and p7,p8 when "
        "derived from)";
  } else if (name == "duplicate-vote") {
    auto full = build_voting_trace("Alice", "m1", kBallotSteps);
    auto partial = build_voting_trace("Alice", "m1", ballot_prefix(5));
    auto two_states = build_two_state_trace("Alice");
    rep.rows.push_back(run_row("slice(alice_full_trace, Alice)", slice_by_agent(full, "Alice"),
                               "receipt_attributed", true));
    rep.rows.push_back(run_row("slice(alice_before_receipt, Alice)",
                               slice_by_agent(partial, "Alice"), "receipt_attributed", false));
    rep.rows.push_back(run_row("slice(alice_two_states, Alice)",
                               slice_by_agent(two_states, "Alice"), "receipt_attributed", true));
    rep.conclusion = "Alice already holds a receipt: second ballot refused";
  } else if (name == "blacklist") {
    auto trace = build_voting_trace("Bob", "m1", {VotingStep::KeyGen});
    Environment felons;
    felons.sets["blacklist"] = {"Bob"};
    Environment nobody;
    nobody.sets["blacklist"] = {};
    rep.rows.push_back(
        run_row("bob_keygen_trace, blacklist={Bob}", trace, "blacklisted_actor", true, felons));
    rep.rows.push_back(
        run_row("bob_keygen_trace, blacklist={}", trace, "blacklisted_actor", false, nobody));
    auto alice = build_voting_trace("Alice", "m1", {VotingStep::KeyGen});
    rep.rows.push_back(
        run_row("alice_keygen_trace, blacklist={Bob}", alice, "blacklisted_actor", false, felons));
    rep.conclusion = "machine is acting on behalf of blacklisted Bob: ballot refused";
  } else if (name == "manipulation") {
    auto slice = slice_by_agent(build_manipulation_trace("Mallory"), "Mallory");
    for (VotingStep s : kBallotSteps) {
      rep.rows.push_back(run_row("slice(mallory_trace, Mallory)", slice, step_policy_name(s),
                                 s != VotingStep::PrintReceipt));
    }
    rep.conclusion = "Mallory completed every step up to Count; no receipt was printed";
  } else {
    return std::nullopt;
  }
  return rep;
}

}  // namespace acdc

#endif  // ACDC_SCENARIO_REPORT_HPP
