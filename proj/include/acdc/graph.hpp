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

/// @file graph.hpp
/// Provenance graph data model.
///
/// A ProvGraph is a finite, labeled, directed acyclic graph whose vertices
/// are tagged with one of six sorts (three entity subtypes, two agent
/// subtypes, activities) and whose edges carry one of six relation labels.
/// Graphs are values: every insertion returns a new graph and leaves the
/// receiver untouched, so a policy evaluation can never observe a
/// partially built record.

#ifndef ACDC_GRAPH_HPP
#define ACDC_GRAPH_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acdc/error.hpp"

namespace acdc {

enum class VertexKind {
  KeyEntity,
  ContractEntity,
  DataEntity,
  NodeAgent,
  AccountAgent,
  Activity,
};

inline constexpr std::array<VertexKind, 6> kAllKinds = {
    VertexKind::KeyEntity,  VertexKind::ContractEntity, VertexKind::DataEntity,
    VertexKind::NodeAgent,  VertexKind::AccountAgent,   VertexKind::Activity,
};

/// Quantifier domains: the six vertex kinds plus their unions.
enum class Sort {
  KeyEntity,
  ContractEntity,
  DataEntity,
  NodeAgent,
  AccountAgent,
  Activity,
  Entity,
  Agent,
  AnyVertex,
};

inline constexpr std::array<Sort, 9> kAllSorts = {
    Sort::KeyEntity, Sort::ContractEntity, Sort::DataEntity,
    Sort::NodeAgent, Sort::AccountAgent,   Sort::Activity,
    Sort::Entity,    Sort::Agent,          Sort::AnyVertex,
};

enum class RelationLabel {
  Used,
  WasDerivedFrom,
  WasAttributedTo,
  ActedOnBehalfOf,
  WasAssociatedWith,
  WasGeneratedBy,
};

inline constexpr std::array<RelationLabel, 6> kAllLabels = {
    RelationLabel::Used,            RelationLabel::WasDerivedFrom,
    RelationLabel::WasAttributedTo, RelationLabel::ActedOnBehalfOf,
    RelationLabel::WasAssociatedWith, RelationLabel::WasGeneratedBy,
};

constexpr bool is_entity(VertexKind k) {
  return k == VertexKind::KeyEntity || k == VertexKind::ContractEntity ||
         k == VertexKind::DataEntity;
}

constexpr bool is_agent(VertexKind k) {
  return k == VertexKind::NodeAgent || k == VertexKind::AccountAgent;
}

constexpr Sort sort_of(VertexKind k) { return static_cast<Sort>(k); }

/// True iff a vertex of kind `k` lies in the domain of `s`.
constexpr bool in_sort(Sort s, VertexKind k) {
  switch (s) {
    case Sort::Entity: return is_entity(k);
    case Sort::Agent: return is_agent(k);
    case Sort::AnyVertex: return true;
    default: return sort_of(k) == s;
  }
}

// ---------------------------------------------------------------------------
// Names. Kinds and sorts use snake_case (as in documents and policies),
// labels use the PROV relation names.

inline std::string_view to_string(Sort s) {
  switch (s) {
    case Sort::KeyEntity: return "key_entity";
    case Sort::ContractEntity: return "contract_entity";
    case Sort::DataEntity: return "data_entity";
    case Sort::NodeAgent: return "node_agent";
    case Sort::AccountAgent: return "account_agent";
    case Sort::Activity: return "activity";
    case Sort::Entity: return "entity";
    case Sort::Agent: return "agent";
    case Sort::AnyVertex: return "vertex";
  }
  return "?";
}

inline std::string_view to_string(VertexKind k) { return to_string(sort_of(k)); }

inline std::string_view to_string(RelationLabel l) {
  switch (l) {
    case RelationLabel::Used: return "Used";
    case RelationLabel::WasDerivedFrom: return "WasDerivedFrom";
    case RelationLabel::WasAttributedTo: return "WasAttributedTo";
    case RelationLabel::ActedOnBehalfOf: return "ActedOnBehalfOf";
    case RelationLabel::WasAssociatedWith: return "WasAssociatedWith";
    case RelationLabel::WasGeneratedBy: return "WasGeneratedBy";
  }
  return "?";
}

inline std::optional<Sort> sort_from_string(std::string_view name) {
  for (Sort s : kAllSorts)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

inline std::optional<VertexKind> kind_from_string(std::string_view name) {
  for (VertexKind k : kAllKinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

inline std::optional<RelationLabel> label_from_string(std::string_view name) {
  for (RelationLabel l : kAllLabels)
    if (to_string(l) == name) return l;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Relation typing.

struct TypingRule {
  RelationLabel label;
  Sort source;       // Entity, Activity or NodeAgent
  Sort destination;  // a kind or a union sort
};

/// Allowed (source, destination) sorts per relation. A (kind, kind, label)
/// triple is well typed iff some row with that label admits both kinds.
inline constexpr std::array<TypingRule, 7> kTypingRules = {{
    {RelationLabel::WasAttributedTo, Sort::Entity, Sort::NodeAgent},
    {RelationLabel::WasAttributedTo, Sort::Entity, Sort::AccountAgent},
    {RelationLabel::WasDerivedFrom, Sort::Entity, Sort::Entity},
    {RelationLabel::Used, Sort::Activity, Sort::Entity},
    {RelationLabel::ActedOnBehalfOf, Sort::NodeAgent, Sort::AccountAgent},
    {RelationLabel::WasAssociatedWith, Sort::Activity, Sort::NodeAgent},
    // Not part of the ACDC relation table; follows PROV's direction
    // (entity generated by activity).
    {RelationLabel::WasGeneratedBy, Sort::Entity, Sort::Activity},
}};

constexpr bool edge_allowed(RelationLabel label, VertexKind src, VertexKind dst) {
  for (const auto& rule : kTypingRules) {
    if (rule.label == label && in_sort(rule.source, src) &&
        in_sort(rule.destination, dst))
      return true;
  }
  return false;
}

/// Human-readable form of the rows for `label`, e.g.
/// "activity -> node_agent".
inline std::string typing_row(RelationLabel label) {
  std::string out;
  for (const auto& rule : kTypingRules) {
    if (rule.label != label) continue;
    if (!out.empty()) out += " | ";
    out += std::string(to_string(rule.source)) + " -> " +
           std::string(to_string(rule.destination));
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Vertex {
  std::string id;
  VertexKind kind;
  /// Display metadata. Policies cannot observe it.
  std::map<std::string, std::string> attrs;

  bool operator==(const Vertex&) const = default;
};

struct LabeledEdge {
  std::string src;
  std::string dst;
  RelationLabel label;

  auto operator<=>(const LabeledEdge&) const = default;
  bool operator==(const LabeledEdge&) const = default;
};

/// One edge that does not match the relation typing table.
struct TypeViolation {
  LabeledEdge edge;
  VertexKind src_kind;
  VertexKind dst_kind;
  std::string expected;  // the violated row(s), see typing_row()

  std::string describe() const {
    return edge.src + " -[" + std::string(to_string(edge.label)) + "]-> " +
           edge.dst + ": " + std::string(to_string(src_kind)) + " -> " +
           std::string(to_string(dst_kind)) + " not allowed; expected " +
           expected;
  }

  bool operator==(const TypeViolation&) const = default;
};

/// A directed cycle v0 -> v1 -> ... -> v0, reported without the repeated
/// closing vertex.
using Cycle = std::vector<std::string>;

inline std::string describe(const Cycle& cycle) {
  std::string out;
  for (const auto& id : cycle) out += id + " -> ";
  return cycle.empty() ? out : out + cycle.front();
}

/// How much of the edge contract add_edge enforces. `Unchecked` only
/// requires both endpoints to exist; it is what validation tooling uses to
/// materialize records that may violate typing or acyclicity so that the
/// violations can be reported.
enum class EdgeCheck { Full, Unchecked };

class ProvGraph {
 public:
  using VertexMap = std::map<std::string, Vertex, std::less<>>;
  using EdgeSet = std::set<LabeledEdge>;

  ProvGraph() = default;

  ProvGraph add_vertex(std::string id, VertexKind kind,
                       std::map<std::string, std::string> attrs = {}) const& {
    ProvGraph copy(*this);
    copy.insert_vertex(std::move(id), kind, std::move(attrs));
    return copy;
  }
  ProvGraph add_vertex(std::string id, VertexKind kind,
                       std::map<std::string, std::string> attrs = {}) && {
    insert_vertex(std::move(id), kind, std::move(attrs));
    return std::move(*this);
  }

  ProvGraph add_edge(std::string src, std::string dst, RelationLabel label,
                     EdgeCheck check = EdgeCheck::Full) const& {
    ProvGraph copy(*this);
    copy.insert_edge(std::move(src), std::move(dst), label, check);
    return copy;
  }
  ProvGraph add_edge(std::string src, std::string dst, RelationLabel label,
                     EdgeCheck check = EdgeCheck::Full) && {
    insert_edge(std::move(src), std::move(dst), label, check);
    return std::move(*this);
  }

  const VertexMap& vertices() const noexcept { return vertices_; }
  const EdgeSet& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  bool contains(std::string_view id) const { return vertices_.find(id) != vertices_.end(); }

  const Vertex* find(std::string_view id) const {
    auto it = vertices_.find(id);
    return it == vertices_.end() ? nullptr : &it->second;
  }

  std::optional<VertexKind> kind_of(std::string_view id) const {
    const Vertex* v = find(id);
    return v ? std::optional<VertexKind>(v->kind) : std::nullopt;
  }

  bool has_edge(std::string_view src, std::string_view dst, RelationLabel label) const {
    return edges_.contains(LabeledEdge{std::string(src), std::string(dst), label});
  }

  /// Outgoing edges of `src`, ordered by (dst, label).
  std::vector<LabeledEdge> out_edges(std::string_view src) const {
    std::vector<LabeledEdge> out;
    for (auto it = edges_.lower_bound(LabeledEdge{std::string(src), {}, kAllLabels.front()});
         it != edges_.end() && it->src == src; ++it)
      out.push_back(*it);
    return out;
  }

  /// Ids whose kind lies in `sort`, in lexicographic order.
  std::vector<std::string> vertices_of_sort(Sort sort) const {
    std::vector<std::string> ids;
    for (const auto& [id, v] : vertices_)
      if (in_sort(sort, v.kind)) ids.push_back(id);
    return ids;
  }

  /// True iff `to` is reachable from `from` along directed edges.
  bool reaches(std::string_view from, std::string_view to) const {
    std::vector<std::string> stack{std::string(from)};
    std::set<std::string, std::less<>> seen{std::string(from)};
    while (!stack.empty()) {
      std::string cur = std::move(stack.back());
      stack.pop_back();
      if (cur == to) return true;
      for (auto it = edges_.lower_bound(LabeledEdge{cur, {}, kAllLabels.front()});
           it != edges_.end() && it->src == cur; ++it) {
        if (seen.insert(it->dst).second) stack.push_back(it->dst);
      }
    }
    return false;
  }

  bool operator==(const ProvGraph&) const = default;

 private:
  void insert_vertex(std::string id, VertexKind kind,
                     std::map<std::string, std::string> attrs) {
    if (id.empty()) throw Error(Errc::EmptyId, "vertex id must be non-empty");
    if (auto it = vertices_.find(id); it != vertices_.end()) {
      if (it->second.kind != kind) {
        throw Error(Errc::DuplicateId,
                    "vertex '" + id + "' already exists as " +
                        std::string(to_string(it->second.kind)) + ", not " +
                        std::string(to_string(kind)));
      }
      return;
    }
    Vertex v{id, kind, std::move(attrs)};
    vertices_.emplace(std::move(id), std::move(v));
  }

  void insert_edge(std::string src, std::string dst, RelationLabel label,
                   EdgeCheck check) {
    const Vertex* s = find(src);
    const Vertex* d = find(dst);
    if (!s) throw Error(Errc::MissingVertex, "edge source '" + src + "' does not exist");
    if (!d) throw Error(Errc::MissingVertex, "edge destination '" + dst + "' does not exist");
    if (check == EdgeCheck::Full) {
      if (!edge_allowed(label, s->kind, d->kind)) {
        TypeViolation tv{{src, dst, label}, s->kind, d->kind, typing_row(label)};
        throw Error(Errc::TypeViolation, tv.describe());
      }
      if (src == dst)
        throw Error(Errc::CycleIntroduced, "self-loop on '" + src + "'");
      if (!has_edge(src, dst, label) && reaches(dst, src)) {
        throw Error(Errc::CycleIntroduced, "edge " + src + " -> " + dst +
                                               " closes a cycle (" + dst +
                                               " already reaches " + src + ")");
      }
    }
    edges_.insert(LabeledEdge{std::move(src), std::move(dst), label});
  }

  VertexMap vertices_;
  EdgeSet edges_;
};

// ---------------------------------------------------------------------------
// Free-function forms.

inline ProvGraph add_vertex(ProvGraph graph, std::string id, VertexKind kind) {
  return std::move(graph).add_vertex(std::move(id), kind);
}

inline ProvGraph add_edge(ProvGraph graph, std::string src, std::string dst,
                          RelationLabel label) {
  return std::move(graph).add_edge(std::move(src), std::move(dst), label);
}

inline bool has_edge(const ProvGraph& graph, std::string_view src,
                     std::string_view dst, RelationLabel label) {
  return graph.has_edge(src, dst, label);
}

inline std::vector<std::string> vertices_of_sort(const ProvGraph& graph, Sort sort) {
  return graph.vertices_of_sort(sort);
}

/// Every edge whose endpoint kinds the typing table rejects, in edge order.
inline std::vector<TypeViolation> validate_typing(const ProvGraph& graph) {
  std::vector<TypeViolation> out;
  for (const auto& e : graph.edges()) {
    VertexKind sk = graph.find(e.src)->kind;
    VertexKind dk = graph.find(e.dst)->kind;
    if (!edge_allowed(e.label, sk, dk))
      out.push_back(TypeViolation{e, sk, dk, typing_row(e.label)});
  }
  return out;
}

/// Directed cycles, labels ignored. One cycle is reported per DFS back
/// edge, so the list is empty iff the graph is acyclic.
inline std::vector<Cycle> validate_acyclic(const ProvGraph& graph) {
  enum class Color { White, Gray, Black };
  std::map<std::string_view, Color> color;
  for (const auto& [id, v] : graph.vertices()) color[id] = Color::White;

  // Successor lists without label multiplicity.
  std::map<std::string_view, std::vector<std::string_view>> succ;
  for (const auto& e : graph.edges()) {
    auto& s = succ[e.src];
    if (s.empty() || s.back() != e.dst) s.push_back(e.dst);
  }

  std::vector<Cycle> cycles;
  struct Frame {
    std::string_view id;
    std::size_t next;
  };
  for (const auto& [root, v] : graph.vertices()) {
    if (color[root] != Color::White) continue;
    std::vector<Frame> stack{{root, 0}};
    color[root] = Color::Gray;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& next = succ[top.id];
      if (top.next == next.size()) {
        color[top.id] = Color::Black;
        stack.pop_back();
        continue;
      }
      std::string_view w = next[top.next++];
      if (color[w] == Color::White) {
        color[w] = Color::Gray;
        stack.push_back({w, 0});
      } else if (color[w] == Color::Gray) {
        auto from = std::find_if(stack.begin(), stack.end(),
                                 [&](const Frame& f) { return f.id == w; });
        Cycle c;
        for (auto it = from; it != stack.end(); ++it) c.emplace_back(it->id);
        cycles.push_back(std::move(c));
      }
    }
  }
  return cycles;
}

/// Vertex and edge union. Shared ids must agree on kind; the result is
/// checked like any other insertion.
inline ProvGraph graph_union(const ProvGraph& a, const ProvGraph& b) {
  ProvGraph out = a;
  for (const auto& [id, v] : b.vertices())
    out = std::move(out).add_vertex(id, v.kind, v.attrs);
  for (const auto& e : b.edges()) out = std::move(out).add_edge(e.src, e.dst, e.label);
  return out;
}

/// True iff every vertex and edge of `sub` is in `super`.
inline bool is_subgraph(const ProvGraph& sub, const ProvGraph& super) {
  for (const auto& [id, v] : sub.vertices()) {
    const Vertex* w = super.find(id);
    if (!w || w->kind != v.kind) return false;
  }
  return std::includes(super.edges().begin(), super.edges().end(),
                       sub.edges().begin(), sub.edges().end());
}

}  // namespace acdc

#endif  // ACDC_GRAPH_HPP
