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

// Random graphs, environments and formulas for the property suites.

#ifndef ACDC_TESTS_SUPPORT_GENERATORS_HPP
#define ACDC_TESTS_SUPPORT_GENERATORS_HPP

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "acdc/acdc.hpp"

namespace acdc::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename C>
const auto& pick(Rng& rng, const C& c) {
  return *std::next(std::begin(c), uniform(rng, 0, std::size(c) - 1));
}

inline std::string vertex_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "v%02zu", i);
  return buf;
}

// Appends `extra` vertices and then draws edges among all vertices. An edge
// is only kept when it is well typed and does not close a cycle, so every
// graph produced here is a valid record.
inline ProvGraph extend_graph(Rng& rng, ProvGraph g, std::size_t extra, double edge_p = 0.3) {
  std::size_t base = g.vertex_count();
  for (std::size_t i = 0; i < extra; ++i)
    g = std::move(g).add_vertex(vertex_name(base + i), pick(rng, kAllKinds));

  std::vector<std::string> ids;
  for (const auto& [id, v] : g.vertices()) ids.push_back(id);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& a : ids)
    for (const auto& b : ids)
      if (a != b) pairs.emplace_back(a, b);
  std::shuffle(pairs.begin(), pairs.end(), rng);

  for (const auto& [a, b] : pairs) {
    for (RelationLabel l : kAllLabels) {
      if (!edge_allowed(l, *g.kind_of(a), *g.kind_of(b)) || g.has_edge(a, b, l)) continue;
      if (!coin(rng, edge_p) || g.reaches(b, a)) continue;
      g = std::move(g).add_edge(a, b, l);
    }
  }
  return g;
}

inline ProvGraph random_graph(Rng& rng, std::size_t max_vertices = 12, double edge_p = 0.3) {
  return extend_graph(rng, ProvGraph{}, uniform(rng, 0, max_vertices), edge_p);
}

inline constexpr std::array<const char*, 3> kConstNames = {"c0", "c1", "c2"};
inline constexpr std::array<const char*, 2> kSetNames = {"S0", "S1"};

// Constants point at graph vertices, at an id absent from the graph, or
// are left unbound; sets are random subsets of the vertex ids.
inline Environment random_environment(Rng& rng, const ProvGraph& g) {
  Environment env;
  std::vector<std::string> ids;
  for (const auto& [id, v] : g.vertices()) ids.push_back(id);
  for (const char* c : kConstNames) {
    std::size_t roll = uniform(rng, 0, 9);
    if (roll == 0) continue;
    env.constants[c] = (roll == 1 || ids.empty()) ? std::string("ghost") : pick(rng, ids);
  }
  for (const char* s : kSetNames) {
    if (coin(rng, 0.1)) continue;
    auto& members = env.sets[s];
    for (const auto& id : ids)
      if (coin(rng, 0.3)) members.insert(id);
  }
  return env;
}

/// Well-scoped random formulas. Variables are always fresh (x0, x1, ...)
/// so shadowing never occurs, and constant names never collide with them.
class FormulaGen {
 public:
  struct Options {
    int depth = 3;
    bool existential_positive = false;
    double quantifier_bias = 0.5;
  };

  FormulaGen(Rng& rng, Options opts) : rng_(rng), opts_(opts) {}

  FormulaPtr closed() { return gen(opts_.depth, {}); }

  // A formula whose free variables are exactly drawn from `scope`.
  FormulaPtr open(std::vector<std::string> scope) { return gen(opts_.depth, std::move(scope)); }

  std::string fresh_var() { return "x" + std::to_string(next_var_++); }

  Sort random_sort() { return pick(rng_, kAllSorts); }

 private:
  enum class Shape { Atom, Not, And, Or, Implies, Exists, Forall };

  FormulaPtr gen(int depth, std::vector<std::string> scope) {
    if (depth <= 0) return atom(scope);
    Shape s = shape();
    switch (s) {
      case Shape::Atom: return atom(scope);
      case Shape::Not: return negate(gen(depth - 1, scope));
      case Shape::And: return conj(gen(depth - 1, scope), gen(depth - 1, scope));
      case Shape::Or: return disj(gen(depth - 1, scope), gen(depth - 1, scope));
      case Shape::Implies: return implies(gen(depth - 1, scope), gen(depth - 1, scope));
      case Shape::Exists:
      case Shape::Forall: {
        std::string v = fresh_var();
        Sort sort = random_sort();
        scope.push_back(v);
        FormulaPtr body = gen(depth - 1, scope);
        return s == Shape::Exists ? exists(v, sort, body) : forall(v, sort, body);
      }
    }
    return truth(true);
  }

  Shape shape() {
    if (coin(rng_, opts_.quantifier_bias))
      return (opts_.existential_positive || coin(rng_, 0.5)) ? Shape::Exists : Shape::Forall;
    if (opts_.existential_positive)
      return pick(rng_, std::array{Shape::Atom, Shape::And, Shape::Or});
    return pick(rng_, std::array{Shape::Atom, Shape::Not, Shape::And, Shape::Or, Shape::Implies});
  }

  Term term(const std::vector<std::string>& scope) {
    if (!scope.empty() && coin(rng_, 0.75)) return Term::var(pick(rng_, scope));
    return Term::constant(pick(rng_, kConstNames));
  }

  FormulaPtr atom(const std::vector<std::string>& scope) {
    std::size_t roll = uniform(rng_, 0, 9);
    if (roll < 7) return edge(term(scope), term(scope), pick(rng_, kAllLabels));
    if (roll < 9) return member(term(scope), pick(rng_, kSetNames));
    return truth(coin(rng_, 0.5));
  }

  Rng& rng_;
  Options opts_;
  int next_var_ = 0;
};

/// Bound corpus policies with the environments they are meant to run under.
inline std::vector<std::pair<std::string, BoundPolicy>> corpus_bindings() {
  std::vector<std::pair<std::string, BoundPolicy>> out;
  for (const auto& p : corpus()) out.emplace_back(p.name, p.bound());
  Environment felons;
  felons.sets["blacklist"] = {"Bob"};
  out.emplace_back("blacklisted_actor[felons]", corpus_policy("blacklisted_actor")->bound(felons));
  return out;
}

}  // namespace acdc::testing

#endif  // ACDC_TESTS_SUPPORT_GENERATORS_HPP
