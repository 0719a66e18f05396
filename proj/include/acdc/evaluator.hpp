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

/// @file evaluator.hpp
/// Policy satisfaction over a finite provenance graph.
///
/// Quantifiers range over the graph's own vertices of the requested sort,
/// visited in lexicographic id order, so witnesses are deterministic.
/// Connectives short-circuit. An atom that mentions an unresolved constant
/// or set is false.

#ifndef ACDC_EVALUATOR_HPP
#define ACDC_EVALUATOR_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "acdc/error.hpp"
#include "acdc/graph.hpp"
#include "acdc/policy.hpp"

namespace acdc {

/// Variable name -> vertex id.
using Assignment = std::map<std::string, std::string>;

struct Verdict {
  bool satisfied = false;
  /// Bindings of the outermost run of existentials, when satisfied.
  std::optional<Assignment> witness;
  /// Bindings of the outermost run of universals, when violated.
  std::optional<Assignment> counterexample;
  std::vector<std::string> diagnostics;
};

/// The graph handed to an evaluator failed typing or acyclicity checks.
class InvalidGraphError : public Error {
 public:
  InvalidGraphError(std::vector<TypeViolation> typing, std::vector<Cycle> cycles)
      : Error(Errc::InvalidGraph, summarize(typing, cycles)),
        typing_(std::move(typing)),
        cycles_(std::move(cycles)) {}

  const std::vector<TypeViolation>& typing_violations() const noexcept { return typing_; }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }

 private:
  static std::string summarize(const std::vector<TypeViolation>& t,
                               const std::vector<Cycle>& c) {
    std::string msg = std::to_string(t.size()) + " typing violation(s), " +
                      std::to_string(c.size()) + " cycle(s)";
    if (!t.empty()) msg += "; first: " + t.front().describe();
    else if (!c.empty()) msg += "; first: " + describe(c.front());
    return msg;
  }

  std::vector<TypeViolation> typing_;
  std::vector<Cycle> cycles_;
};

/// Throws InvalidGraphError unless the graph is well typed and acyclic.
inline void require_valid(const ProvGraph& graph) {
  auto typing = validate_typing(graph);
  auto cycles = validate_acyclic(graph);
  if (!typing.empty() || !cycles.empty())
    throw InvalidGraphError(std::move(typing), std::move(cycles));
}

namespace detail {

class Evaluator {
 public:
  Evaluator(const BoundPolicy& policy, const ProvGraph& graph)
      : policy_(policy), graph_(graph) {
    for (Sort s : kAllSorts) domains_[static_cast<std::size_t>(s)] = graph.vertices_of_sort(s);
  }

  bool eval(const Formula& f, Assignment& env) const {
    return std::visit(
        [&](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Quantified>) {
            bool want = x.kind == Quantified::Kind::Exists;
            for (const auto& id : domain(x.sort)) {
              env[x.var] = id;
              if (eval(*x.body, env) == want) {
                env.erase(x.var);
                return want;
              }
            }
            env.erase(x.var);
            return !want;
          } else if constexpr (std::is_same_v<T, Connective>) {
            switch (x.kind) {
              case Connective::Kind::And: return eval(*x.lhs, env) && eval(*x.rhs, env);
              case Connective::Kind::Or: return eval(*x.lhs, env) || eval(*x.rhs, env);
              case Connective::Kind::Implies: return !eval(*x.lhs, env) || eval(*x.rhs, env);
            }
            return false;
          } else if constexpr (std::is_same_v<T, Negation>) {
            return !eval(*x.operand, env);
          } else if constexpr (std::is_same_v<T, EdgeAtom>) {
            auto from = resolve(x.from, env);
            auto to = resolve(x.to, env);
            return from && to && graph_.has_edge(*from, *to, x.label);
          } else if constexpr (std::is_same_v<T, MemberAtom>) {
            auto id = resolve(x.term, env);
            auto it = policy_.resolved.sets.find(x.set);
            return id && it != policy_.resolved.sets.end() && it->second.contains(*id);
          } else {
            return x.value;
          }
        },
        f.node());
  }

  /// Searches the leading run of same-kind quantifiers for the first
  /// assignment (in domain order) whose body decides the formula: a
  /// satisfying one under `exists`, a refuting one under `forall`.
  Verdict decide(const Formula& root) const {
    Verdict v;
    const auto* q = root.as<Quantified>();
    if (!q) {
      Assignment env;
      v.satisfied = eval(root, env);
      return v;
    }
    std::vector<const Quantified*> prefix;
    const Formula* body = &root;
    while (const auto* next = body->as<Quantified>()) {
      if (next->kind != q->kind) break;
      prefix.push_back(next);
      body = next->body.get();
    }
    bool want = q->kind == Quantified::Kind::Exists;
    Assignment env;
    bool found = search(prefix, 0, *body, want, env);
    if (want) {
      v.satisfied = found;
      if (found) v.witness = env;
    } else {
      v.satisfied = !found;
      if (found) v.counterexample = env;
    }
    return v;
  }

 private:
  const std::vector<std::string>& domain(Sort s) const {
    return domains_[static_cast<std::size_t>(s)];
  }

  std::optional<std::string> resolve(const Term& t, const Assignment& env) const {
    if (t.is_var()) {
      auto it = env.find(t.name);
      return it == env.end() ? std::nullopt : std::optional<std::string>(it->second);
    }
    auto it = policy_.resolved.constants.find(t.name);
    return it == policy_.resolved.constants.end() ? std::nullopt
                                                  : std::optional<std::string>(it->second);
  }

  // On success `env` holds the deciding assignment.
  bool search(const std::vector<const Quantified*>& prefix, std::size_t i,
              const Formula& body, bool want, Assignment& env) const {
    if (i == prefix.size()) return eval(body, env) == want;
    for (const auto& id : domain(prefix[i]->sort)) {
      env[prefix[i]->var] = id;
      if (search(prefix, i + 1, body, want, env)) return true;
    }
    env.erase(prefix[i]->var);
    return false;
  }

  const BoundPolicy& policy_;
  const ProvGraph& graph_;
  std::array<std::vector<std::string>, kAllSorts.size()> domains_;
};

inline std::vector<std::string> unresolved_notes(const BoundPolicy& policy) {
  std::vector<std::string> notes;
  for (const auto& c : policy.unresolved_constants)
    notes.push_back("unresolved constant '" + c + "': atoms mentioning it are false");
  for (const auto& s : policy.unresolved_sets)
    notes.push_back("unresolved set '" + s + "': membership atoms over it are false");
  return notes;
}

}  // namespace detail

/// Decides `policy` on `graph`. Throws InvalidGraphError when the graph is
/// ill typed or cyclic.
inline Verdict evaluate(const BoundPolicy& policy, const ProvGraph& graph) {
  require_valid(graph);
  Verdict v = detail::Evaluator(policy, graph).decide(*policy.ast);
  v.diagnostics = detail::unresolved_notes(policy);
  return v;
}

/// Evaluates `body` under a fixed initial variable assignment. The
/// assignment must cover every free variable of `body`.
inline bool evaluate_open(const BoundPolicy& policy, const Formula& body,
                          const ProvGraph& graph, Assignment assignment) {
  require_valid(graph);
  return detail::Evaluator(policy, graph).eval(body, assignment);
}

/// Right-folded conjunction. Environments are merged; the same name bound
/// to different values is a ConflictingBinding error.
inline BoundPolicy conjoin(const std::vector<BoundPolicy>& policies) {
  if (policies.empty()) throw Error(Errc::EmptyList, "conjoin needs at least one policy");

  Environment merged;
  for (const auto& p : policies) {
    for (const auto& [name, id] : p.resolved.constants) {
      auto [it, fresh] = merged.constants.emplace(name, id);
      if (!fresh && it->second != id) {
        throw Error(Errc::ConflictingBinding, "constant '" + name + "' bound to both '" +
                                                  it->second + "' and '" + id + "'");
      }
    }
    for (const auto& [name, ids] : p.resolved.sets) {
      auto [it, fresh] = merged.sets.emplace(name, ids);
      if (!fresh && it->second != ids)
        throw Error(Errc::ConflictingBinding, "set '" + name + "' bound to two different sets");
    }
  }

  PolicyAst ast = policies.back().ast;
  for (auto it = policies.rbegin() + 1; it != policies.rend(); ++it) ast = conj(it->ast, ast);
  return acdc::bind(std::move(ast), merged);
}

}  // namespace acdc

#endif  // ACDC_EVALUATOR_HPP
