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

// Galaxy (star forest) decompositions and the verifier that certifies them.
//
// A class of edges is a star forest iff every edge has an endpoint of degree
// one inside the class: two vertices of degree >= 2 in one component are
// joined by a path whose first edge has both endpoints of degree >= 2.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galaxy/errors.hpp"
#include "galaxy/graph.hpp"

namespace galaxy {

struct GalaxyDecomposition {
  std::shared_ptr<const Graph> graph;
  std::vector<EdgeList> classes;
  std::string provenance;

  std::size_t class_count() const { return classes.size(); }
};

// Sorts every class canonically. Class order is left untouched.
inline void normalize(GalaxyDecomposition& d) {
  for (EdgeList& cls : d.classes) std::sort(cls.begin(), cls.end());
}

struct Star {
  Vertex center = 0;
  std::vector<Vertex> leaves;

  friend bool operator==(const Star&, const Star&) = default;
};

enum class ViolationKind {
  kEdgeNotInGraph,
  kDuplicateEdge,
  kUncoveredEdge,
  kNotAStar,
};

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEdgeNotInGraph: return "edge-not-in-graph";
    case ViolationKind::kDuplicateEdge: return "duplicate-edge";
    case ViolationKind::kUncoveredEdge: return "uncovered-edge";
    case ViolationKind::kNotAStar: return "not-a-star";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind = ViolationKind::kNotAStar;
  // Absent for uncovered edges, which belong to no class.
  std::optional<std::size_t> class_index;
  Edge edge;
  std::string reason;
};

struct StarCensus {
  std::vector<Star> stars;  // sorted by center
  std::optional<Violation> violation;

  bool ok() const { return !violation.has_value(); }
};

namespace detail {

// Degree of every endpoint of a duplicate-free edge set, looked up by binary
// search so the vertex universe can be arbitrary.
class ClassDegrees {
 public:
  explicit ClassDegrees(const EdgeList& edges) {
    std::vector<Vertex> ends;
    ends.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
      ends.push_back(e.u);
      ends.push_back(e.v);
    }
    std::sort(ends.begin(), ends.end());
    for (std::size_t i = 0; i < ends.size();) {
      std::size_t j = i;
      while (j < ends.size() && ends[j] == ends[i]) ++j;
      table_.emplace_back(ends[i], j - i);
      i = j;
    }
  }

  std::size_t operator()(Vertex x) const {
    auto it = std::lower_bound(table_.begin(), table_.end(), std::pair<Vertex, std::size_t>{x, 0});
    return (it != table_.end() && it->first == x) ? it->second : 0;
  }

 private:
  std::vector<std::pair<Vertex, std::size_t>> table_;
};

inline EdgeList sorted_unique(EdgeList edges) {
  for (Edge& e : edges) e = Edge::of(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace detail

// Splits one class into its stars. A K_{1,1} component reports its smaller
// endpoint as the center.
inline StarCensus star_components(const EdgeList& cls) {
  StarCensus census;
  const EdgeList edges = detail::sorted_unique(cls);
  const detail::ClassDegrees degree(edges);
  std::map<Vertex, std::vector<Vertex>> by_center;
  for (const Edge& e : edges) {
    const std::size_t du = degree(e.u);
    const std::size_t dv = degree(e.v);
    if (du >= 2 && dv >= 2) {
      census.violation = Violation{ViolationKind::kNotAStar, std::nullopt, e,
                                   "both endpoints have degree >= 2 in the class"};
      census.stars.clear();
      return census;
    }
    const Vertex center = du >= 2 ? e.u : (dv >= 2 ? e.v : e.u);
    by_center[center].push_back(e.other(center));
  }
  for (auto& [center, leaves] : by_center) {
    std::sort(leaves.begin(), leaves.end());
    census.stars.push_back({center, std::move(leaves)});
  }
  return census;
}

struct VerificationReport {
  bool valid = false;
  std::size_t class_count = 0;
  std::vector<Violation> violations;
  // Per class: star center -> number of leaves. Empty for classes that are
  // not star forests.
  std::vector<std::map<Vertex, std::size_t>> centers;

  std::size_t count(ViolationKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
  }
};

// Checks that the classes partition E(g) and that each class is a star
// forest. Problems are reported, never thrown.
inline VerificationReport verify_decomposition(const Graph& g, const GalaxyDecomposition& d) {
  VerificationReport report;
  report.class_count = d.classes.size();
  report.centers.resize(d.classes.size());

  std::vector<std::uint8_t> seen(g.edge_count(), 0);
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    EdgeList canonical = d.classes[c];
    for (Edge& e : canonical) e = Edge::of(e.u, e.v);
    std::sort(canonical.begin(), canonical.end());

    for (std::size_t i = 0; i < canonical.size(); ++i) {
      const Edge e = canonical[i];
      if (i > 0 && canonical[i - 1] == e) {
        report.violations.push_back({ViolationKind::kDuplicateEdge, c, e,
                                     "edge repeated within the class"});
        continue;
      }
      const auto index = g.edge_index(e);
      if (!index) {
        report.violations.push_back({ViolationKind::kEdgeNotInGraph, c, e,
                                     "edge is not in the graph"});
        continue;
      }
      if (seen[*index]) {
        report.violations.push_back({ViolationKind::kDuplicateEdge, c, e,
                                     "edge already appears in an earlier class"});
        continue;
      }
      seen[*index] = 1;
    }

    StarCensus census = star_components(canonical);
    if (census.ok()) {
      for (const Star& s : census.stars) report.centers[c][s.center] = s.leaves.size();
    } else {
      census.violation->class_index = c;
      report.violations.push_back(*census.violation);
    }
  }

  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!seen[i]) {
      report.violations.push_back({ViolationKind::kUncoveredEdge, std::nullopt, g.edges()[i],
                                   "edge is in no class"});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

inline VerificationReport verify_decomposition(const GalaxyDecomposition& d) {
  if (!d.graph) throw Error("decomposition has no graph");
  return verify_decomposition(*d.graph, d);
}

// Throws ConstructionError unless `d` verifies. Used by the constructions to
// certify their own output.
inline const GalaxyDecomposition& certify(const GalaxyDecomposition& d) {
  const VerificationReport report = verify_decomposition(d);
  if (!report.valid) {
    const Violation& v = report.violations.front();
    throw ConstructionError(d.provenance + ": " + to_string(v.kind) + " at edge (" +
                            std::to_string(v.edge.u) + "," + std::to_string(v.edge.v) +
                            "): " + v.reason);
  }
  return d;
}

inline bool is_star_forest(const EdgeList& cls) { return star_components(cls).ok(); }

}  // namespace galaxy
