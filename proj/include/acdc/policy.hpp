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

/// @file policy.hpp
/// First-order provenance policies: syntax tree, canonical printing, and
/// binding of free names to vertex ids.
///
/// A policy is a closed formula over one provenance graph. Quantifiers range
/// over the graph's vertices of a given sort; atoms test labeled-edge
/// membership or membership of a vertex in a named parameter set. Free names
/// in term position are constants, resolved through an Environment.

#ifndef ACDC_POLICY_HPP
#define ACDC_POLICY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "acdc/error.hpp"
#include "acdc/graph.hpp"

namespace acdc {

struct Term {
  enum class Kind { Var, Const };
  Kind kind;
  std::string name;

  static Term var(std::string name) { return {Kind::Var, std::move(name)}; }
  static Term constant(std::string name) { return {Kind::Const, std::move(name)}; }

  bool is_var() const { return kind == Kind::Var; }
  bool operator==(const Term&) const = default;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Quantified {
  enum class Kind { Exists, Forall };
  Kind kind;
  std::string var;
  Sort sort;
  FormulaPtr body;
};

struct Connective {
  enum class Kind { And, Or, Implies };
  Kind kind;
  FormulaPtr lhs;
  FormulaPtr rhs;
};

struct Negation {
  FormulaPtr operand;
};

struct EdgeAtom {
  Term from;
  Term to;
  RelationLabel label;
};

struct MemberAtom {
  Term term;
  std::string set;
};

struct Truth {
  bool value;
};

/// Immutable formula node. Subtrees are shared, so copies are cheap and
/// structural equality is deep.
class Formula {
 public:
  using Node = std::variant<Quantified, Connective, Negation, EdgeAtom, MemberAtom, Truth>;

  explicit Formula(Node node) : node_(std::move(node)) {}

  const Node& node() const noexcept { return node_; }

  template <typename T>
  const T* as() const noexcept {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

/// The policy syntax tree is a shared formula root.
using PolicyAst = FormulaPtr;

// Node factories.
inline FormulaPtr exists(std::string var, Sort sort, FormulaPtr body) {
  return std::make_shared<const Formula>(
      Quantified{Quantified::Kind::Exists, std::move(var), sort, std::move(body)});
}
inline FormulaPtr forall(std::string var, Sort sort, FormulaPtr body) {
  return std::make_shared<const Formula>(
      Quantified{Quantified::Kind::Forall, std::move(var), sort, std::move(body)});
}
inline FormulaPtr conj(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<const Formula>(
      Connective{Connective::Kind::And, std::move(l), std::move(r)});
}
inline FormulaPtr disj(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<const Formula>(
      Connective{Connective::Kind::Or, std::move(l), std::move(r)});
}
inline FormulaPtr implies(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<const Formula>(
      Connective{Connective::Kind::Implies, std::move(l), std::move(r)});
}
inline FormulaPtr negate(FormulaPtr x) {
  return std::make_shared<const Formula>(Negation{std::move(x)});
}
inline FormulaPtr edge(Term from, Term to, RelationLabel label) {
  return std::make_shared<const Formula>(EdgeAtom{std::move(from), std::move(to), label});
}
inline FormulaPtr member(Term t, std::string set) {
  return std::make_shared<const Formula>(MemberAtom{std::move(t), std::move(set)});
}
inline FormulaPtr truth(bool value) { return std::make_shared<const Formula>(Truth{value}); }

/// Deep structural equality.
inline bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = *b.as<T>();
        if constexpr (std::is_same_v<T, Quantified>) {
          return x.kind == y.kind && x.var == y.var && x.sort == y.sort &&
                 structurally_equal(*x.body, *y.body);
        } else if constexpr (std::is_same_v<T, Connective>) {
          return x.kind == y.kind && structurally_equal(*x.lhs, *y.lhs) &&
                 structurally_equal(*x.rhs, *y.rhs);
        } else if constexpr (std::is_same_v<T, Negation>) {
          return structurally_equal(*x.operand, *y.operand);
        } else if constexpr (std::is_same_v<T, EdgeAtom>) {
          return x.from == y.from && x.to == y.to && x.label == y.label;
        } else if constexpr (std::is_same_v<T, MemberAtom>) {
          return x.term == y.term && x.set == y.set;
        } else {
          return x.value == y.value;
        }
      },
      a.node());
}

inline bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return structurally_equal(*a, *b);
}

// ---------------------------------------------------------------------------
// Free names.

struct FreeNames {
  std::set<std::string> constants;
  std::set<std::string> sets;
};

namespace detail {
inline void collect_names(const Formula& f, FreeNames& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Quantified>) {
          collect_names(*x.body, out);
        } else if constexpr (std::is_same_v<T, Connective>) {
          collect_names(*x.lhs, out);
          collect_names(*x.rhs, out);
        } else if constexpr (std::is_same_v<T, Negation>) {
          collect_names(*x.operand, out);
        } else if constexpr (std::is_same_v<T, EdgeAtom>) {
          if (!x.from.is_var()) out.constants.insert(x.from.name);
          if (!x.to.is_var()) out.constants.insert(x.to.name);
        } else if constexpr (std::is_same_v<T, MemberAtom>) {
          if (!x.term.is_var()) out.constants.insert(x.term.name);
          out.sets.insert(x.set);
        }
      },
      f.node());
}

inline bool well_scoped(const Formula& f, std::vector<std::string>& scope) {
  auto bound = [&](const std::string& n) {
    return std::find(scope.begin(), scope.end(), n) != scope.end();
  };
  auto term_ok = [&](const Term& t) { return t.is_var() == bound(t.name); };
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Quantified>) {
          if (bound(x.var)) return false;
          scope.push_back(x.var);
          bool ok = well_scoped(*x.body, scope);
          scope.pop_back();
          return ok;
        } else if constexpr (std::is_same_v<T, Connective>) {
          return well_scoped(*x.lhs, scope) && well_scoped(*x.rhs, scope);
        } else if constexpr (std::is_same_v<T, Negation>) {
          return well_scoped(*x.operand, scope);
        } else if constexpr (std::is_same_v<T, EdgeAtom>) {
          return term_ok(x.from) && term_ok(x.to);
        } else if constexpr (std::is_same_v<T, MemberAtom>) {
          return term_ok(x.term);
        } else {
          return true;
        }
      },
      f.node());
}
}  // namespace detail

inline FreeNames free_names(const Formula& f) {
  FreeNames out;
  detail::collect_names(f, out);
  return out;
}

/// Every variable is bound by an enclosing quantifier, no quantifier
/// rebinds a name already in scope, and no constant shares a name with a
/// variable in scope. Exactly the trees the printer can round-trip.
inline bool well_scoped(const Formula& f) {
  std::vector<std::string> scope;
  return detail::well_scoped(f, scope);
}

// ---------------------------------------------------------------------------
// Canonical text.

namespace detail {

// Grammar levels, loosest first. A node printed where a tighter level is
// required gets parentheses.
enum class Level { Expr = 0, Implies = 1, Or = 2, And = 3, Unary = 4 };

inline Level level_of(const Formula& f) {
  if (f.as<Quantified>()) return Level::Expr;
  if (const auto* c = f.as<Connective>()) {
    switch (c->kind) {
      case Connective::Kind::Implies: return Level::Implies;
      case Connective::Kind::Or: return Level::Or;
      case Connective::Kind::And: return Level::And;
    }
  }
  return Level::Unary;
}

inline void print(const Formula& f, Level ctx, std::string& out);

inline void print_at(const Formula& f, Level ctx, std::string& out) {
  if (level_of(f) < ctx) {
    out += '(';
    print(f, Level::Expr, out);
    out += ')';
  } else {
    print(f, ctx, out);
  }
}

inline void print(const Formula& f, Level, std::string& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Quantified>) {
          out += x.kind == Quantified::Kind::Exists ? "exists " : "forall ";
          out += x.var;
          out += ": ";
          out += to_string(x.sort);
          out += " . ";
          print_at(*x.body, Level::Expr, out);
        } else if constexpr (std::is_same_v<T, Connective>) {
          switch (x.kind) {
            case Connective::Kind::Implies:
              print_at(*x.lhs, Level::Or, out);
              out += " => ";
              print_at(*x.rhs, Level::Implies, out);
              break;
            case Connective::Kind::Or:
              print_at(*x.lhs, Level::Or, out);
              out += " or ";
              print_at(*x.rhs, Level::And, out);
              break;
            case Connective::Kind::And:
              print_at(*x.lhs, Level::And, out);
              out += " and ";
              print_at(*x.rhs, Level::Unary, out);
              break;
          }
        } else if constexpr (std::is_same_v<T, Negation>) {
          out += "not ";
          print_at(*x.operand, Level::Unary, out);
        } else if constexpr (std::is_same_v<T, EdgeAtom>) {
          out += "edge(" + x.from.name + ", " + x.to.name + ", " +
                 std::string(to_string(x.label)) + ")";
        } else if constexpr (std::is_same_v<T, MemberAtom>) {
          out += "member(" + x.term.name + ", " + x.set + ")";
        } else {
          out += x.value ? "true" : "false";
        }
      },
      f.node());
}

}  // namespace detail

/// Canonical single-line text. Parentheses appear only where precedence or
/// associativity requires them: `and`/`or` group to the left, `=>` to the
/// right, and a quantifier used as an operand is always parenthesized.
inline std::string pretty_print(const Formula& f) {
  std::string out;
  detail::print(f, detail::Level::Expr, out);
  return out;
}

inline std::string pretty_print(const FormulaPtr& f) { return pretty_print(*f); }

// ---------------------------------------------------------------------------
// Binding.

/// Values for a policy's free names. Ids are plain strings; whether they
/// exist in a particular graph is only checked during evaluation.
struct Environment {
  std::map<std::string, std::string> constants;
  std::map<std::string, std::set<std::string>> sets;

  bool operator==(const Environment&) const = default;
};

enum class BindMode { Lenient, Strict };

/// A policy with its free names resolved against an environment.
struct BoundPolicy {
  PolicyAst ast;
  /// Resolution table: only the names the policy mentions.
  Environment resolved;
  std::vector<std::string> unresolved_constants;
  std::vector<std::string> unresolved_sets;

  bool fully_resolved() const {
    return unresolved_constants.empty() && unresolved_sets.empty();
  }
};

namespace detail {

struct BindFn {
  BoundPolicy operator()(PolicyAst ast, const Environment& env,
                         BindMode mode = BindMode::Lenient) const;
};

}  // namespace detail

/// Resolves constants and set names. In strict mode any unresolved name
/// raises Errc::StrictBinding; otherwise unresolved names are recorded and
/// the atoms mentioning them evaluate to false.
///
/// A function object rather than a function: an unqualified bind(ast, env)
/// would otherwise also find std::bind through the shared_ptr argument.
inline constexpr detail::BindFn bind{};

inline BoundPolicy detail::BindFn::operator()(PolicyAst ast, const Environment& env,
                                              BindMode mode) const {
  BoundPolicy out;
  FreeNames names = free_names(*ast);
  for (const auto& c : names.constants) {
    if (auto it = env.constants.find(c); it != env.constants.end())
      out.resolved.constants.emplace(c, it->second);
    else
      out.unresolved_constants.push_back(c);
  }
  for (const auto& s : names.sets) {
    if (auto it = env.sets.find(s); it != env.sets.end())
      out.resolved.sets.emplace(s, it->second);
    else
      out.unresolved_sets.push_back(s);
  }
  if (mode == BindMode::Strict && !out.fully_resolved()) {
    std::string msg = "unresolved names:";
    for (const auto& c : out.unresolved_constants) msg += " constant " + c;
    for (const auto& s : out.unresolved_sets) msg += " set " + s;
    throw Error(Errc::StrictBinding, msg);
  }
  out.ast = std::move(ast);
  return out;
}

}  // namespace acdc

#endif  // ACDC_POLICY_HPP
