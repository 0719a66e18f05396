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

/// @file store.hpp
/// JSON documents for graphs, environments and verdicts.
///
/// Graph document (format "acdc-prov/1"):
///
///   {
///     "version": "acdc-prov/1",
///     "vertices": [ {"id": "...", "kind": "data_entity", "attrs": {...}}, ... ],
///     "edges":    [ {"src": "...", "dst": "...", "label": "Used"}, ... ]
///   }
///
/// `attrs` is optional. save_graph() writes the canonical form: vertices
/// sorted by id, edges by (src, dst, label) with labels in declaration
/// order of RelationLabel, two-space indentation, trailing newline.

#ifndef ACDC_STORE_HPP
#define ACDC_STORE_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "acdc/error.hpp"
#include "acdc/evaluator.hpp"
#include "acdc/graph.hpp"
#include "acdc/policy.hpp"

namespace acdc {

inline constexpr std::string_view kGraphFormatVersion = "acdc-prov/1";

struct GraphDocument {
  struct VertexRecord {
    std::string id;
    VertexKind kind;
    std::map<std::string, std::string> attrs;
  };
  std::string version;
  std::vector<VertexRecord> vertices;
  std::vector<LabeledEdge> edges;
};

namespace detail {

using nlohmann::json;

[[noreturn]] inline void malformed(const std::string& where, const std::string& what) {
  throw Error(Errc::MalformedDocument, where + ": " + what);
}

inline json parse_json(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    malformed("byte " + std::to_string(e.byte), "invalid JSON");
  }
}

inline const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(where, std::string("missing \"") + key + "\"");
  return *it;
}

inline std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) malformed(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace detail

/// Parses and schema-checks a graph document. Errors name the offending
/// JSON location (a JSON pointer or a byte offset).
inline GraphDocument parse_graph_document(std::string_view bytes) {
  using detail::json;
  json root = detail::parse_json(bytes);
  if (!root.is_object()) detail::malformed("/", "expected an object");

  GraphDocument doc;
  doc.version = detail::string_field(root, "version", "");
  if (doc.version != kGraphFormatVersion) {
    throw Error(Errc::UnsupportedVersion, "unsupported format version \"" + doc.version +
                                              "\" (expected \"" +
                                              std::string(kGraphFormatVersion) + "\")");
  }

  const json& vertices = detail::field(root, "vertices", "");
  if (!vertices.is_array()) detail::malformed("/vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "/vertices/" + std::to_string(i);
    const json& rec = vertices[i];
    if (!rec.is_object()) detail::malformed(where, "expected an object");
    GraphDocument::VertexRecord v;
    v.id = detail::string_field(rec, "id", where);
    if (v.id.empty()) detail::malformed(where + "/id", "empty id");
    std::string kind = detail::string_field(rec, "kind", where);
    auto k = kind_from_string(kind);
    if (!k) throw Error(Errc::UnknownKind, where + "/kind: unknown vertex kind \"" + kind + "\"");
    v.kind = *k;
    if (auto it = rec.find("attrs"); it != rec.end()) {
      if (!it->is_object()) detail::malformed(where + "/attrs", "expected an object");
      for (const auto& [key, val] : it->items()) {
        if (!val.is_string()) detail::malformed(where + "/attrs/" + key, "expected a string");
        v.attrs.emplace(key, val.get<std::string>());
      }
    }
    doc.vertices.push_back(std::move(v));
  }

  const json& edges = detail::field(root, "edges", "");
  if (!edges.is_array()) detail::malformed("/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const json& rec = edges[i];
    if (!rec.is_object()) detail::malformed(where, "expected an object");
    LabeledEdge e;
    e.src = detail::string_field(rec, "src", where);
    e.dst = detail::string_field(rec, "dst", where);
    std::string label = detail::string_field(rec, "label", where);
    auto l = label_from_string(label);
    if (!l) throw Error(Errc::UnknownLabel, where + "/label: unknown relation label \"" + label + "\"");
    e.label = *l;
    doc.edges.push_back(std::move(e));
  }
  return doc;
}

/// Builds a graph through the regular insertion operations. With
/// EdgeCheck::Unchecked, typing and acyclicity are left for the validators.
/// Construction errors keep their category and name the record.
inline ProvGraph to_graph(const GraphDocument& doc, EdgeCheck check = EdgeCheck::Full) {
  ProvGraph g;
  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    const auto& v = doc.vertices[i];
    const std::string where = "/vertices/" + std::to_string(i);
    if (!seen.insert(v.id).second)
      throw Error(Errc::DuplicateId, where + ": duplicate vertex id \"" + v.id + "\"");
    g = std::move(g).add_vertex(v.id, v.kind, v.attrs);
  }
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const auto& e = doc.edges[i];
    const std::string where = "/edges/" + std::to_string(i);
    if (g.has_edge(e.src, e.dst, e.label))
      throw Error(Errc::MalformedDocument, where + ": duplicate edge");
    try {
      g = std::move(g).add_edge(e.src, e.dst, e.label, check);
    } catch (const Error& err) {
      throw Error(err.code(), where + ": " + err.detail());
    }
  }
  return g;
}

inline GraphDocument to_document(const ProvGraph& graph) {
  GraphDocument doc;
  doc.version = std::string(kGraphFormatVersion);
  for (const auto& [id, v] : graph.vertices()) doc.vertices.push_back({v.id, v.kind, v.attrs});
  doc.edges.assign(graph.edges().begin(), graph.edges().end());
  return doc;
}

/// Parses a document and builds a fully checked graph.
inline ProvGraph load_graph(std::string_view bytes) {
  return to_graph(parse_graph_document(bytes), EdgeCheck::Full);
}

/// As load_graph(), but keeps ill-typed or cyclic edges so that they can be
/// reported by validate_typing() / validate_acyclic().
inline ProvGraph load_graph_unchecked(std::string_view bytes) {
  return to_graph(parse_graph_document(bytes), EdgeCheck::Unchecked);
}

/// Canonical serialization; equal graphs produce identical bytes.
inline std::string save_graph(const ProvGraph& graph) {
  using oj = nlohmann::ordered_json;
  oj vertices = oj::array();
  for (const auto& [id, v] : graph.vertices()) {
    oj rec = {{"id", v.id}, {"kind", std::string(to_string(v.kind))}};
    if (!v.attrs.empty()) {
      oj attrs = oj::object();
      for (const auto& [k, val] : v.attrs) attrs[k] = val;
      rec["attrs"] = std::move(attrs);
    }
    vertices.push_back(std::move(rec));
  }
  oj edges = oj::array();
  for (const auto& e : graph.edges())
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"label", std::string(to_string(e.label))}});
  oj root = {{"version", std::string(kGraphFormatVersion)},
             {"vertices", std::move(vertices)},
             {"edges", std::move(edges)}};
  return root.dump(2, ' ', false) + "\n";
}

// ---------------------------------------------------------------------------
// Environments: {"constants": {name: id}, "sets": {name: [id, ...]}}.
// Both members are optional.

inline Environment load_environment(std::string_view bytes) {
  using detail::json;
  json root = detail::parse_json(bytes);
  if (!root.is_object()) detail::malformed("/", "expected an object");
  Environment env;
  if (auto it = root.find("constants"); it != root.end()) {
    if (!it->is_object()) detail::malformed("/constants", "expected an object");
    for (const auto& [name, id] : it->items()) {
      if (!id.is_string()) detail::malformed("/constants/" + name, "expected a string");
      env.constants.emplace(name, id.get<std::string>());
    }
  }
  if (auto it = root.find("sets"); it != root.end()) {
    if (!it->is_object()) detail::malformed("/sets", "expected an object");
    for (const auto& [name, ids] : it->items()) {
      if (!ids.is_array()) detail::malformed("/sets/" + name, "expected an array");
      auto& dst = env.sets[name];
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!ids[i].is_string())
          detail::malformed("/sets/" + name + "/" + std::to_string(i), "expected a string");
        dst.insert(ids[i].get<std::string>());
      }
    }
  }
  return env;
}

inline std::string save_environment(const Environment& env) {
  using oj = nlohmann::ordered_json;
  oj constants = oj::object();
  for (const auto& [k, v] : env.constants) constants[k] = v;
  oj sets = oj::object();
  for (const auto& [k, ids] : env.sets) {
    oj arr = oj::array();
    for (const auto& id : ids) arr.push_back(id);
    sets[k] = std::move(arr);
  }
  oj root = {{"constants", std::move(constants)}, {"sets", std::move(sets)}};
  return root.dump(2, ' ', false) + "\n";
}

// ---------------------------------------------------------------------------

/// Machine-readable verdict: satisfied, witness, counterexample (objects or
/// null) and diagnostics.
inline std::string verdict_to_json(const Verdict& v) {
  using oj = nlohmann::ordered_json;
  auto bindings = [](const std::optional<Assignment>& a) -> oj {
    if (!a) return nullptr;
    oj out = oj::object();
    for (const auto& [var, id] : *a) out[var] = id;
    return out;
  };
  oj root = {{"satisfied", v.satisfied},
             {"witness", bindings(v.witness)},
             {"counterexample", bindings(v.counterexample)},
             {"diagnostics", v.diagnostics}};
  return root.dump(2, ' ', false) + "\n";
}

}  // namespace acdc

#endif  // ACDC_STORE_HPP
