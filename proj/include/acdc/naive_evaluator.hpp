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

/// @file naive_evaluator.hpp
/// Reference evaluator used to cross-check evaluate().
///
/// Works bottom-up: every subformula is turned into a complete truth table
/// over the Cartesian product of its free variables' sort domains. Both
/// sides of every connective and every element of every quantifier domain
/// are always computed. Exponential in quantifier nesting; meant for small
/// graphs.

#ifndef ACDC_NAIVE_EVALUATOR_HPP
#define ACDC_NAIVE_EVALUATOR_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "acdc/evaluator.hpp"
#include "acdc/graph.hpp"
#include "acdc/policy.hpp"

namespace acdc {

namespace detail {

class TruthTables {
 public:
  TruthTables(const BoundPolicy& policy, const ProvGraph& graph)
      : policy_(policy), graph_(graph) {}

  bool closed_value(const Formula& f) {
    Table t = build(f, {});
    // A closed formula has exactly one row.
    return t.rows.at(0) != 0;
  }

 private:
  struct Table {
    std::vector<std::string> vars;  // sorted
    std::vector<std::vector<std::string>> domains;
    std::vector<char> rows;         // mixed radix, last variable fastest
  };

  using Scope = std::map<std::string, Sort>;

  Table frame(std::vector<std::string> vars, const Scope& scope) const {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    Table t;
    std::size_t n = 1;
    for (const auto& v : vars) {
      std::vector<std::string> dom;
      for (const auto& [id, vx] : graph_.vertices())
        if (in_sort(scope.at(v), vx.kind)) dom.push_back(id);
      n *= dom.size();
      t.domains.push_back(std::move(dom));
    }
    t.vars = std::move(vars);
    t.rows.assign(n, 0);
    return t;
  }

  static std::vector<std::size_t> digits(const Table& t, std::size_t row) {
    std::vector<std::size_t> d(t.vars.size());
    for (std::size_t i = t.vars.size(); i-- > 0;) {
      d[i] = row % t.domains[i].size();
      row /= t.domains[i].size();
    }
    return d;
  }

  // Row of `child` matching the parent's assignment.
  static std::size_t project(const Table& parent, const std::vector<std::size_t>& d,
                             const Table& child) {
    std::size_t row = 0;
    for (std::size_t i = 0; i < child.vars.size(); ++i) {
      auto pos = std::lower_bound(parent.vars.begin(), parent.vars.end(), child.vars[i]) -
                 parent.vars.begin();
      row = row * child.domains[i].size() + d[pos];
    }
    return row;
  }

  std::string value_of(const Term& t, const Table& table, const std::vector<std::size_t>& d,
                       bool& resolved) const {
    if (t.is_var()) {
      auto pos = std::lower_bound(table.vars.begin(), table.vars.end(), t.name) -
                 table.vars.begin();
      resolved = true;
      return table.domains[pos][d[pos]];
    }
    auto it = policy_.resolved.constants.find(t.name);
    resolved = it != policy_.resolved.constants.end();
    return resolved ? it->second : std::string();
  }

  Table build(const Formula& f, const Scope& scope) {
    return std::visit(
        [&](const auto& x) -> Table {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Truth>) {
            Table t = frame({}, scope);
            t.rows[0] = x.value;
            return t;
          } else if constexpr (std::is_same_v<T, EdgeAtom>) {
            std::vector<std::string> vars;
            if (x.from.is_var()) vars.push_back(x.from.name);
            if (x.to.is_var()) vars.push_back(x.to.name);
            Table t = frame(vars, scope);
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
              auto d = digits(t, r);
              bool ok1 = false, ok2 = false;
              std::string a = value_of(x.from, t, d, ok1);
              std::string b = value_of(x.to, t, d, ok2);
              t.rows[r] = ok1 && ok2 && graph_.edges().count(LabeledEdge{a, b, x.label}) == 1;
            }
            return t;
          } else if constexpr (std::is_same_v<T, MemberAtom>) {
            std::vector<std::string> vars;
            if (x.term.is_var()) vars.push_back(x.term.name);
            Table t = frame(vars, scope);
            auto set = policy_.resolved.sets.find(x.set);
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
              auto d = digits(t, r);
              bool ok = false;
              std::string a = value_of(x.term, t, d, ok);
              t.rows[r] = ok && set != policy_.resolved.sets.end() && set->second.count(a) == 1;
            }
            return t;
          } else if constexpr (std::is_same_v<T, Negation>) {
            Table t = build(*x.operand, scope);
            for (auto& r : t.rows) r = !r;
            return t;
          } else if constexpr (std::is_same_v<T, Connective>) {
            Table l = build(*x.lhs, scope);
            Table r = build(*x.rhs, scope);
            std::vector<std::string> vars = l.vars;
            vars.insert(vars.end(), r.vars.begin(), r.vars.end());
            Table t = frame(vars, scope);
            for (std::size_t row = 0; row < t.rows.size(); ++row) {
              auto d = digits(t, row);
              bool a = l.rows[project(t, d, l)] != 0;
              bool b = r.rows[project(t, d, r)] != 0;
              switch (x.kind) {
                case Connective::Kind::And: t.rows[row] = a && b; break;
                case Connective::Kind::Or: t.rows[row] = a || b; break;
                case Connective::Kind::Implies: t.rows[row] = !a || b; break;
              }
            }
            return t;
          } else {
            static_assert(std::is_same_v<T, Quantified>);
            Scope inner = scope;
            inner[x.var] = x.sort;
            Table body = build(*x.body, inner);
            std::vector<std::string> vars;
            for (const auto& v : body.vars)
              if (v != x.var) vars.push_back(v);
            Table t = frame(vars, scope);
            std::vector<std::string> dom;
            for (const auto& [id, vx] : graph_.vertices())
              if (in_sort(x.sort, vx.kind)) dom.push_back(id);

            for (std::size_t row = 0; row < t.rows.size(); ++row) {
              auto d = digits(t, row);
              std::vector<char> results;
              for (std::size_t k = 0; k < dom.size(); ++k) {
                // Extend the parent assignment with var := dom[k].
                std::size_t brow = 0;
                for (std::size_t i = 0; i < body.vars.size(); ++i) {
                  std::size_t digit;
                  if (body.vars[i] == x.var) {
                    digit = k;
                  } else {
                    auto pos = std::lower_bound(t.vars.begin(), t.vars.end(), body.vars[i]) -
                               t.vars.begin();
                    digit = d[pos];
                  }
                  brow = brow * body.domains[i].size() + digit;
                }
                results.push_back(body.rows[brow]);
              }
              bool any = std::count(results.begin(), results.end(), 1) > 0;
              bool all = std::count(results.begin(), results.end(), 1) ==
                         static_cast<std::ptrdiff_t>(results.size());
              t.rows[row] = x.kind == Quantified::Kind::Exists ? any : all;
            }
            return t;
          }
        },
        f.node());
  }

  const BoundPolicy& policy_;
  const ProvGraph& graph_;
};

}  // namespace detail

/// Same semantics as evaluate(), computed by exhaustive materialization.
inline bool evaluate_naive(const BoundPolicy& policy, const ProvGraph& graph) {
  require_valid(graph);
  return detail::TruthTables(policy, graph).closed_value(*policy.ast);
}

}  // namespace acdc

#endif  // ACDC_NAIVE_EVALUATOR_HPP
