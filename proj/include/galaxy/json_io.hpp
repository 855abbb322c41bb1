// Copyright 2026 The Galaxy Authors.
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

// JSON documents for decompositions, verification reports, bounds reports
// and colorings.
//
// Decomposition document:
//   { "n": 9 | "graph6": "...", "provenance": "...",
//     "classes": [[[u, v], ...], ...] }
// Hypercubes are written with "n", anything else with "graph6". Pairs are
// canonical (u < v) and each class is sorted.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "galaxy/bounds.hpp"
#include "galaxy/decomposition.hpp"
#include "galaxy/errors.hpp"
#include "galaxy/graph.hpp"
#include "galaxy/graph6.hpp"
#include "galaxy/square_coloring.hpp"

namespace galaxy {

using Json = nlohmann::json;

// Raised for structurally malformed documents (as opposed to documents that
// parse but describe an invalid decomposition).
class DocumentError : public Error {
 public:
  using Error::Error;
};

inline Json to_json(const GalaxyDecomposition& d) {
  Json doc;
  if (d.graph->dimension()) {
    doc["n"] = *d.graph->dimension();
  } else {
    doc["graph6"] = write_graph6(*d.graph);
  }
  doc["provenance"] = d.provenance;
  Json classes = Json::array();
  for (const EdgeList& cls : d.classes) {
    EdgeList sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    Json arr = Json::array();
    for (const Edge& e : sorted) arr.push_back({e.u, e.v});
    classes.push_back(std::move(arr));
  }
  doc["classes"] = std::move(classes);
  return doc;
}

// Graph named by a document's "n" or "graph6" field.
inline Graph graph_from_json(const Json& doc) {
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer()) throw DocumentError("\"n\" must be an integer");
    return hypercube(doc["n"].get<int>());
  }
  if (doc.contains("graph6")) {
    if (!doc["graph6"].is_string()) throw DocumentError("\"graph6\" must be a string");
    return parse_graph6(doc["graph6"].get<std::string>());
  }
  throw DocumentError("document names no graph (expected \"n\" or \"graph6\")");
}

// Reads the classes of a decomposition document over `graph`. Pairs are
// canonicalized but not checked against the graph; that is the verifier's
// job.
inline GalaxyDecomposition decomposition_from_json(const Json& doc,
                                                   std::shared_ptr<const Graph> graph) {
  if (!doc.is_object()) throw DocumentError("decomposition must be a JSON object");
  if (!doc.contains("classes") || !doc["classes"].is_array()) {
    throw DocumentError("\"classes\" must be an array");
  }
  GalaxyDecomposition d{std::move(graph), {}, doc.value("provenance", std::string{})};
  for (const Json& cls : doc["classes"]) {
    if (!cls.is_array()) throw DocumentError("each class must be an array");
    EdgeList edges;
    for (const Json& pair : cls) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
          !pair[1].is_number_unsigned()) {
        throw DocumentError("each edge must be a pair of non-negative integers");
      }
      const auto u = pair[0].get<std::uint64_t>();
      const auto v = pair[1].get<std::uint64_t>();
      if (u > UINT32_MAX || v > UINT32_MAX) throw DocumentError("vertex id too large");
      if (u == v) throw DocumentError("self-loop " + std::to_string(u));
      edges.push_back(Edge::of(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    }
    d.classes.push_back(std::move(edges));
  }
  return d;
}

inline GalaxyDecomposition decomposition_from_json(const Json& doc) {
  return decomposition_from_json(doc, std::make_shared<const Graph>(graph_from_json(doc)));
}

inline Json to_json(const Violation& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["class"] = v.class_index ? Json(*v.class_index) : Json(nullptr);
  j["edge"] = {v.edge.u, v.edge.v};
  j["reason"] = v.reason;
  return j;
}

// At most `violation_limit` violations are listed; "violation_count" is
// always complete.
inline Json to_json(const VerificationReport& r, std::size_t violation_limit = 100) {
  Json j;
  j["valid"] = r.valid;
  j["class_count"] = r.class_count;
  j["violation_count"] = r.violations.size();
  Json list = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < violation_limit; ++i) {
    list.push_back(to_json(r.violations[i]));
  }
  j["violations"] = std::move(list);
  Json sizes = Json::array();
  for (const auto& centers : r.centers) {
    std::size_t leaves = 0;
    for (const auto& [center, count] : centers) leaves += count;
    sizes.push_back({{"stars", centers.size()}, {"edges", leaves}});
  }
  j["classes"] = std::move(sizes);
  return j;
}

inline Json to_json(const BoundsReport& r) {
  return Json{{"n", r.n},
              {"lower", r.lower},
              {"upper", r.upper},
              {"lower_provenance", r.lower_provenance},
              {"upper_provenance", r.upper_provenance},
              {"exact", r.exact},
              {"conjectured", r.conjectured},
              {"conjecture", r.conjecture}};
}

// Colors as an array aligned to vertex ids.
inline Json to_json(const SquareColoring& col) { return Json(col.colors); }

inline std::vector<std::uint32_t> coloring_from_json(const Json& j) {
  if (!j.is_array()) throw DocumentError("coloring must be an array");
  std::vector<std::uint32_t> colors;
  colors.reserve(j.size());
  for (const Json& c : j) {
    if (!c.is_number_unsigned()) throw DocumentError("colors must be non-negative integers");
    colors.push_back(c.get<std::uint32_t>());
  }
  return colors;
}

}  // namespace galaxy
