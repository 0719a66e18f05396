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

/// @file prov_ops.hpp
/// Event extraction and per-agent slicing.

#ifndef ACDC_PROV_OPS_HPP
#define ACDC_PROV_OPS_HPP

#include <set>
#include <string>
#include <string_view>

#include "acdc/error.hpp"
#include "acdc/graph.hpp"

namespace acdc {

/// One activity together with its immediate inputs, outputs and their
/// attributions.
struct Event {
  ProvGraph subgraph;
  std::string activity;
};

/// The event subgraph around `activity`:
///   - entities it Used, and entities that WasGeneratedBy it;
///   - WasDerivedFrom edges among those entities;
///   - agents those entities are WasAttributedTo (one hop);
///   - the node agent it WasAssociatedWith;
///   - ActedOnBehalfOf edges among the included agents.
inline Event extract_event(const ProvGraph& graph, std::string_view activity) {
  const Vertex* act = graph.find(activity);
  if (!act) throw Error(Errc::NoSuchActivity, "no vertex '" + std::string(activity) + "'");
  if (act->kind != VertexKind::Activity) {
    throw Error(Errc::WrongKind, "'" + std::string(activity) + "' has kind " +
                                     std::string(to_string(act->kind)) + ", not an activity");
  }

  std::set<std::string, std::less<>> entities;
  std::set<std::string, std::less<>> agents;
  std::set<LabeledEdge> kept;
  for (const auto& e : graph.edges()) {
    if (e.src == activity && e.label == RelationLabel::Used) {
      entities.insert(e.dst);
      kept.insert(e);
    } else if (e.dst == activity && e.label == RelationLabel::WasGeneratedBy) {
      entities.insert(e.src);
      kept.insert(e);
    } else if (e.src == activity && e.label == RelationLabel::WasAssociatedWith) {
      agents.insert(e.dst);
      kept.insert(e);
    }
  }
  for (const auto& e : graph.edges()) {
    if (e.label == RelationLabel::WasAttributedTo && entities.contains(e.src)) {
      agents.insert(e.dst);
      kept.insert(e);
    }
  }
  for (const auto& e : graph.edges()) {
    bool derivation = e.label == RelationLabel::WasDerivedFrom &&
                      entities.contains(e.src) && entities.contains(e.dst);
    bool delegation = e.label == RelationLabel::ActedOnBehalfOf &&
                      agents.contains(e.src) && agents.contains(e.dst);
    if (derivation || delegation) kept.insert(e);
  }

  ProvGraph sub = ProvGraph{}.add_vertex(act->id, act->kind, act->attrs);
  for (const auto* ids : {&entities, &agents}) {
    for (const auto& id : *ids) {
      const Vertex* v = graph.find(id);
      sub = std::move(sub).add_vertex(v->id, v->kind, v->attrs);
    }
  }
  for (const auto& e : kept) sub = std::move(sub).add_edge(e.src, e.dst, e.label);
  return Event{std::move(sub), std::string(activity)};
}

/// Union of every event that involves account agent `agent`, plus the
/// agent itself. Events are joined through shared vertices only, so a
/// node agent serving several accounts does not pull in the other
/// accounts' events.
inline ProvGraph slice_by_agent(const ProvGraph& graph, std::string_view agent) {
  const Vertex* a = graph.find(agent);
  if (!a) throw Error(Errc::NoSuchAgent, "no vertex '" + std::string(agent) + "'");
  if (a->kind != VertexKind::AccountAgent) {
    throw Error(Errc::WrongKind, "'" + std::string(agent) + "' has kind " +
                                     std::string(to_string(a->kind)) +
                                     ", not an account agent");
  }
  ProvGraph out = ProvGraph{}.add_vertex(a->id, a->kind, a->attrs);
  for (const auto& id : graph.vertices_of_sort(Sort::Activity)) {
    Event ev = extract_event(graph, id);
    if (ev.subgraph.contains(agent)) out = graph_union(out, ev.subgraph);
  }
  return out;
}

}  // namespace acdc

#endif  // ACDC_PROV_OPS_HPP
