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

/// @file scenarios.hpp
/// Case-study corpus: the capsule encapsulation record, e-voting workflow
/// traces, and the named policies that audit them.

#ifndef ACDC_SCENARIOS_HPP
#define ACDC_SCENARIOS_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acdc/error.hpp"
#include "acdc/graph.hpp"
#include "acdc/policy.hpp"
#include "acdc/policy_parser.hpp"

namespace acdc {

// ---------------------------------------------------------------------------
// Encapsulation.

/// The record left by `owner` sealing plaintext into a secure capsule on an
/// sgx enclave acting on the owner's behalf.
inline ProvGraph build_encapsulate_event(std::string_view owner_name) {
  if (owner_name.empty()) throw Error(Errc::EmptyId, "owner name must be non-empty");
  const std::string owner(owner_name);
  const std::string owner_key = "Key_" + owner;
  using K = VertexKind;
  using L = RelationLabel;
  return ProvGraph{}
      .add_vertex(owner, K::AccountAgent)
      .add_vertex("sgx", K::NodeAgent)
      .add_vertex("Encapsulate", K::Activity)
      .add_vertex("Plaintext", K::DataEntity)
      .add_vertex("EncapsulateContract", K::ContractEntity)
      .add_vertex("Key_SGX", K::KeyEntity)
      .add_vertex(owner_key, K::KeyEntity)
      .add_vertex("SecureCapsule", K::DataEntity)
      .add_edge("sgx", owner, L::ActedOnBehalfOf)
      .add_edge("Encapsulate", "sgx", L::WasAssociatedWith)
      .add_edge("Encapsulate", "Plaintext", L::Used)
      .add_edge("Encapsulate", "EncapsulateContract", L::Used)
      .add_edge("Encapsulate", "Key_SGX", L::Used)
      .add_edge("Encapsulate", owner_key, L::Used)
      .add_edge("SecureCapsule", "Encapsulate", L::WasGeneratedBy)
      .add_edge("SecureCapsule", "EncapsulateContract", L::WasDerivedFrom)
      .add_edge("SecureCapsule", owner_key, L::WasDerivedFrom)
      .add_edge("SecureCapsule", "Plaintext", L::WasDerivedFrom)
      .add_edge("SecureCapsule", "Key_SGX", L::WasDerivedFrom)
      .add_edge("Key_SGX", "sgx", L::WasAttributedTo)
      .add_edge("Plaintext", owner, L::WasAttributedTo)
      .add_edge(owner_key, owner, L::WasAttributedTo)
      .add_edge("SecureCapsule", owner, L::WasAttributedTo);
}

/// Which pieces of a foreign account's material to splice into an
/// encapsulation record.
struct ForeignMaterial {
  bool key = true;
  bool data = true;
  /// Encapsulate Used the material.
  bool as_input = true;
  /// SecureCapsule WasDerivedFrom the material.
  bool as_derivation = false;
};

/// Adds `intruder` (an account agent) with Key_<intruder> and
/// Plaintext_<intruder> attributed to it, wired into the Encapsulate
/// activity and/or the SecureCapsule derivations.
inline ProvGraph inject_foreign_material(const ProvGraph& record, std::string_view intruder_name,
                                         ForeignMaterial what = {}) {
  const std::string intruder(intruder_name);
  ProvGraph g = record.add_vertex(intruder, VertexKind::AccountAgent);
  auto splice = [&](const std::string& id, VertexKind kind) {
    g = std::move(g)
            .add_vertex(id, kind)
            .add_edge(id, intruder, RelationLabel::WasAttributedTo);
    if (what.as_input) g = std::move(g).add_edge("Encapsulate", id, RelationLabel::Used);
    if (what.as_derivation)
      g = std::move(g).add_edge("SecureCapsule", id, RelationLabel::WasDerivedFrom);
  };
  if (what.key) splice("Key_" + intruder, VertexKind::KeyEntity);
  if (what.data) splice("Plaintext_" + intruder, VertexKind::DataEntity);
  return g;
}

// ---------------------------------------------------------------------------
// E-voting.

enum class VotingStep { KeyGen, Select, Print, Verify, Count, PrintReceipt, Exit };

/// Workflow order of a successfully cast ballot.
inline constexpr std::array<VotingStep, 6> kBallotSteps = {
    VotingStep::KeyGen, VotingStep::Select, VotingStep::Print,
    VotingStep::Verify, VotingStep::Count,  VotingStep::PrintReceipt,
};

inline constexpr std::array<VotingStep, 7> kAllVotingSteps = {
    VotingStep::KeyGen, VotingStep::Select,       VotingStep::Print, VotingStep::Verify,
    VotingStep::Count,  VotingStep::PrintReceipt, VotingStep::Exit,
};

inline std::string_view to_string(VotingStep s) {
  switch (s) {
    case VotingStep::KeyGen: return "KeyGen";
    case VotingStep::Select: return "Select";
    case VotingStep::Print: return "Print";
    case VotingStep::Verify: return "Verify";
    case VotingStep::Count: return "Count";
    case VotingStep::PrintReceipt: return "PrintReceipt";
    case VotingStep::Exit: return "Exit";
  }
  return "?";
}

inline std::optional<VotingStep> voting_step_from_string(std::string_view name) {
  for (VotingStep s : kAllVotingSteps)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

/// Contract vertex governing a step, e.g. "KeyGenContract". Contracts are
/// shared by every trace.
inline std::string contract_id(VotingStep s) { return std::string(to_string(s)) + "Contract"; }

struct StepOutput {
  std::string_view name;
  VertexKind kind;
};

/// Entity generated by a step; Exit generates nothing.
inline std::optional<StepOutput> step_output(VotingStep s) {
  switch (s) {
    case VotingStep::KeyGen: return StepOutput{"VoterKey", VertexKind::KeyEntity};
    case VotingStep::Select: return StepOutput{"Selection", VertexKind::DataEntity};
    case VotingStep::Print: return StepOutput{"PaperBallot", VertexKind::DataEntity};
    case VotingStep::Verify: return StepOutput{"VerifiedBallot", VertexKind::DataEntity};
    case VotingStep::Count: return StepOutput{"Tally", VertexKind::DataEntity};
    case VotingStep::PrintReceipt: return StepOutput{"Receipt", VertexKind::DataEntity};
    case VotingStep::Exit: return std::nullopt;
  }
  return std::nullopt;
}

/// Checks that `steps` is a prefix of kBallotSteps, optionally followed by
/// a single Exit.
inline void check_step_sequence(std::span<const VotingStep> steps) {
  std::size_t n = steps.size();
  if (n > 0 && steps.back() == VotingStep::Exit) --n;
  if (n > kBallotSteps.size())
    throw Error(Errc::InvalidStepSequence, "too many steps");
  for (std::size_t i = 0; i < n; ++i) {
    if (steps[i] != kBallotSteps[i]) {
      throw Error(Errc::InvalidStepSequence,
                  "step " + std::to_string(i) + " is " + std::string(to_string(steps[i])) +
                      ", expected " + std::string(to_string(kBallotSteps[i])));
    }
  }
}

/// Provenance of `voter` working through `steps` on `machine`.
///
/// Activity and output ids are the bare step/output names ("KeyGen",
/// "VoterKey", ...) when `session` is empty and carry an "@<session>"
/// suffix otherwise, so that several traces can be united without
/// colliding. Voter, machine and contract vertices are never suffixed.
///
/// Every step is associated with the machine and uses its contract. Its
/// output is derived from the contract and attributed to the voter, except
/// the Count tally, which is attributed to the machine; Count also uses
/// the verified ballot. Exit uses the voter key when there is one.
inline ProvGraph build_voting_trace(std::string_view voter_name, std::string_view machine_name,
                                    std::span<const VotingStep> steps,
                                    std::string_view session = {}) {
  check_step_sequence(steps);
  const std::string voter(voter_name);
  const std::string machine(machine_name);
  auto qualified = [&](std::string_view base) {
    return session.empty() ? std::string(base)
                           : std::string(base) + "@" + std::string(session);
  };
  using L = RelationLabel;

  ProvGraph g = ProvGraph{}
                    .add_vertex(voter, VertexKind::AccountAgent)
                    .add_vertex(machine, VertexKind::NodeAgent)
                    .add_edge(machine, voter, L::ActedOnBehalfOf);
  bool have_key = false;
  for (VotingStep step : steps) {
    const std::string act = qualified(to_string(step));
    const std::string contract = contract_id(step);
    g = std::move(g)
            .add_vertex(act, VertexKind::Activity)
            .add_vertex(contract, VertexKind::ContractEntity)
            .add_edge(act, machine, L::WasAssociatedWith)
            .add_edge(act, contract, L::Used);
    if (step == VotingStep::Count)
      g = std::move(g).add_edge(act, qualified("VerifiedBallot"), L::Used);
    if (step == VotingStep::Exit && have_key)
      g = std::move(g).add_edge(act, qualified("VoterKey"), L::Used);

    if (auto out = step_output(step)) {
      const std::string id = qualified(out->name);
      const std::string& owner = step == VotingStep::Count ? machine : voter;
      g = std::move(g)
              .add_vertex(id, out->kind)
              .add_edge(id, act, L::WasGeneratedBy)
              .add_edge(id, contract, L::WasDerivedFrom)
              .add_edge(id, owner, L::WasAttributedTo);
    }
    have_key = have_key || step == VotingStep::KeyGen;
  }
  return g;
}

inline ProvGraph build_voting_trace(std::string_view voter, std::string_view machine,
                                    std::initializer_list<VotingStep> steps,
                                    std::string_view session = {}) {
  return build_voting_trace(voter, machine, std::span<const VotingStep>(steps.begin(), steps.size()),
                            session);
}

/// The first `k` ballot steps.
inline std::vector<VotingStep> ballot_prefix(std::size_t k) {
  k = std::min(k, kBallotSteps.size());
  return {kBallotSteps.begin(), kBallotSteps.begin() + static_cast<std::ptrdiff_t>(k)};
}

// ---------------------------------------------------------------------------
// Policies.

struct CorpusPolicy {
  std::string name;
  std::string source;
  Environment default_env;

  PolicyAst ast() const { return parse_policy(source); }
  BoundPolicy bound(BindMode mode = BindMode::Lenient) const {
    return acdc::bind(ast(), default_env, mode);
  }
  BoundPolicy bound(const Environment& env, BindMode mode = BindMode::Lenient) const {
    return acdc::bind(ast(), env, mode);
  }
};

namespace detail {

inline Environment identity_env(std::initializer_list<std::string_view> names) {
  Environment env;
  for (auto n : names) env.constants.emplace(std::string(n), std::string(n));
  return env;
}

inline std::string step_policy_source(VotingStep step) {
  const std::string c = contract_id(step);
  if (step == VotingStep::Count) {
    return "exists d: data_entity . exists a: activity . exists n: node_agent .\n"
           "exists g: account_agent .\n"
           "  edge(a, " + c + ", Used)\n"
           "  and edge(d, a, WasGeneratedBy)\n"
           "  and edge(d, " + c + ", WasDerivedFrom)\n"
           "  and edge(d, n, WasAttributedTo)\n"
           "  and edge(n, g, ActedOnBehalfOf)\n";
  }
  const char* var = step == VotingStep::KeyGen ? "k" : "d";
  const char* sort = step == VotingStep::KeyGen ? "key_entity" : "data_entity";
  return std::string("exists ") + var + ": " + sort +
         " . exists a: activity . exists g: account_agent .\n"
         "  edge(a, " + c + ", Used)\n"
         "  and edge(" + var + ", a, WasGeneratedBy)\n"
         "  and edge(" + var + ", " + c + ", WasDerivedFrom)\n"
         "  and edge(" + var + ", g, WasAttributedTo)\n";
}

}  // namespace detail

/// Name of the completion policy for a ballot step, e.g. "print_receipt_done".
inline std::string step_policy_name(VotingStep s) {
  switch (s) {
    case VotingStep::KeyGen: return "keygen_done";
    case VotingStep::Select: return "select_done";
    case VotingStep::Print: return "print_done";
    case VotingStep::Verify: return "verify_done";
    case VotingStep::Count: return "count_done";
    case VotingStep::PrintReceipt: return "print_receipt_done";
    case VotingStep::Exit: break;
  }
  throw Error(Errc::InvalidStepSequence, "Exit has no completion policy");
}

/// Every named corpus policy, in a fixed order: p1..p9, encapsulate_all,
/// receipt_attributed, blacklisted_actor, then one completion policy per
/// ballot step in workflow order.
inline std::vector<CorpusPolicy> corpus() {
  const Environment capsule_env =
      detail::identity_env({"Encapsulate", "SecureCapsule", "EncapsulateContract", "Bob"});

  auto owned_by_bob = [](const char* subject, const char* relation) {
    return std::string("forall k: key_entity .\n"
                       "  edge(") + subject + ", k, " + relation + ")\n"
           "  => (edge(k, Bob, WasAttributedTo)\n"
           "      or (exists n: node_agent . edge(k, n, WasAttributedTo)\n"
           "                                and edge(n, Bob, ActedOnBehalfOf)))\n";
  };
  auto data_of_bob = [](const char* subject, const char* relation) {
    return std::string("forall d: data_entity .\n"
                       "  edge(") + subject + ", d, " + relation + ")\n"
           "  => edge(d, Bob, WasAttributedTo)\n";
  };

  std::vector<CorpusPolicy> out = {
      {"p1", "exists k: key_entity . edge(Encapsulate, k, Used)\n", capsule_env},
      {"p2", "exists d: data_entity . edge(Encapsulate, d, Used)\n", capsule_env},
      {"p3", owned_by_bob("Encapsulate", "Used"), capsule_env},
      {"p4", data_of_bob("Encapsulate", "Used"), capsule_env},
      {"p5", "exists d: data_entity . edge(SecureCapsule, d, WasDerivedFrom)\n", capsule_env},
      {"p6", "exists k: key_entity . edge(SecureCapsule, k, WasDerivedFrom)\n", capsule_env},
      {"p7", owned_by_bob("SecureCapsule", "WasDerivedFrom"), capsule_env},
      {"p8", data_of_bob("SecureCapsule", "WasDerivedFrom"), capsule_env},
      {"p9", "edge(SecureCapsule, EncapsulateContract, WasDerivedFrom)\n", capsule_env},
  };

  std::string all = "# Conjunction of p1 through p9.\n";
  for (std::size_t i = 0; i < 9; ++i) {
    std::string body = out[i].source;
    while (!body.empty() && body.back() == '\n') body.pop_back();
    all += (i == 0 ? "   (" : "and (") + body + ")\n";
  }
  out.push_back({"encapsulate_all", all, capsule_env});

  const Environment receipt_env = detail::identity_env({"PrintReceiptContract"});
  out.push_back({"receipt_attributed",
                 "# A printed receipt has been attributed to the voter.\n" +
                     detail::step_policy_source(VotingStep::PrintReceipt),
                 receipt_env});

  Environment blacklist_env;
  blacklist_env.sets["blacklist"] = {};
  out.push_back({"blacklisted_actor",
                 "exists b: account_agent .\n"
                 "  member(b, blacklist)\n"
                 "  and (exists n: node_agent . edge(n, b, ActedOnBehalfOf))\n",
                 blacklist_env});

  for (VotingStep s : kBallotSteps) {
    Environment env;
    env.constants.emplace(contract_id(s), contract_id(s));
    out.push_back({step_policy_name(s), detail::step_policy_source(s), env});
  }
  return out;
}

/// Looks up a corpus policy by name.
inline std::optional<CorpusPolicy> corpus_policy(std::string_view name) {
  for (auto& p : corpus())
    if (p.name == name) return p;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Scenario graphs.

struct NamedGraph {
  std::string name;
  ProvGraph graph;
};

/// Alice votes fully in state 1 (machine m1) and later starts KeyGen in
/// state 2 (machine m2). The traces share only Alice and the contracts.
inline ProvGraph build_two_state_trace(std::string_view voter = "Alice") {
  return graph_union(build_voting_trace(voter, "m1", kBallotSteps, "state1"),
                     build_voting_trace(voter, "m2", {VotingStep::KeyGen}, "state2"));
}

/// Mallory leaves right after Count, before a receipt is printed.
inline ProvGraph build_manipulation_trace(std::string_view voter = "Mallory") {
  std::vector<VotingStep> steps = ballot_prefix(5);
  steps.push_back(VotingStep::Exit);
  return build_voting_trace(voter, "m1", steps);
}

/// Valid scenario graphs shipped with the corpus.
inline std::vector<NamedGraph> corpus_graphs() {
  return {
      {"fig2", build_encapsulate_event("Bob")},
      {"fig2_foreign_inputs", inject_foreign_material(build_encapsulate_event("Bob"), "Mallory")},
      {"fig2_foreign_derivation",
       inject_foreign_material(build_encapsulate_event("Bob"), "Mallory",
                               {.key = true, .data = true, .as_input = true,
                                .as_derivation = true})},
      {"alice_full_trace", build_voting_trace("Alice", "m1", kBallotSteps)},
      {"alice_before_receipt", build_voting_trace("Alice", "m1", ballot_prefix(5))},
      {"alice_two_states", build_two_state_trace("Alice")},
      {"two_voters", graph_union(build_voting_trace("Alice", "m1", kBallotSteps, "alice"),
                                 build_voting_trace("Carol", "m1", ballot_prefix(3), "carol"))},
      {"bob_keygen_trace", build_voting_trace("Bob", "m1", {VotingStep::KeyGen})},
      {"mallory_trace", build_manipulation_trace("Mallory")},
  };
}

/// Deliberately broken records for validation tooling. Built unchecked.
inline std::vector<NamedGraph> invalid_corpus_graphs() {
  return {
      {"bad_assoc", ProvGraph{}
                        .add_vertex("Bob", VertexKind::AccountAgent)
                        .add_vertex("Encapsulate", VertexKind::Activity)
                        .add_edge("Encapsulate", "Bob", RelationLabel::WasAssociatedWith,
                                  EdgeCheck::Unchecked)},
      {"cyclic", ProvGraph{}
                     .add_vertex("x", VertexKind::DataEntity)
                     .add_vertex("y", VertexKind::DataEntity)
                     .add_edge("x", "y", RelationLabel::WasDerivedFrom, EdgeCheck::Unchecked)
                     .add_edge("y", "x", RelationLabel::WasDerivedFrom, EdgeCheck::Unchecked)},
  };
}

}  // namespace acdc

#endif  // ACDC_SCENARIOS_HPP
