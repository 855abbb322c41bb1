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

// Exact star arboricity of small graphs by depth-first search.
//
// Edges are assigned in canonical order. Each class keeps, per vertex, its
// degree and (while the degree is 1) its unique neighbor. Adding {u, v} to a
// class keeps it a star forest iff
//   - both endpoints are fresh (a new K_{1,1}), or
//   - exactly one endpoint w is fresh and the other, x, is already a center
//     (degree >= 2) or is half of a K_{1,1} whose other end has degree 1.
// Two non-fresh endpoints would leave an edge with no leaf.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galaxy/decomposition.hpp"
#include "galaxy/errors.hpp"
#include "galaxy/graph.hpp"

namespace galaxy {

struct SearchConfig {
  int max_classes = 16;
  std::uint64_t node_budget = 100'000'000;
  bool symmetry_breaking = true;
};

inline constexpr std::size_t kMaxExactEdges = 64;

// No decomposition into max_classes or fewer galaxies exists.
class ClassLimitError : public Error {
 public:
  explicit ClassLimitError(int max_classes)
      : Error("star arboricity exceeds max_classes = " + std::to_string(max_classes)) {}
};

struct DecideResult {
  bool feasible = false;
  std::optional<GalaxyDecomposition> witness;
  std::uint64_t nodes = 0;
};

namespace exact_detail {

class Search {
 public:
  Search(const Graph& g, int classes, const SearchConfig& cfg)
      : g_(g),
        t_(classes),
        cfg_(cfg),
        n_(g.vertex_count()),
        degree_(static_cast<std::size_t>(classes) * n_, 0),
        partner_(static_cast<std::size_t>(classes) * n_, 0),
        assignment_(g.edge_count(), -1) {}

  bool run() { return descend(0, 0); }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& assignment() const { return assignment_; }

 private:
  std::uint32_t& deg(int c, Vertex x) { return degree_[static_cast<std::size_t>(c) * n_ + x]; }
  Vertex& partner(int c, Vertex x) { return partner_[static_cast<std::size_t>(c) * n_ + x]; }

  // With symmetry breaking, class c may be opened only once classes < c are
  // in use.
  int open_limit(int opened) const {
    return cfg_.symmetry_breaking ? std::min(opened + 1, t_) : t_;
  }

  bool can_add(int c, Vertex u, Vertex v) {
    const std::uint32_t du = deg(c, u);
    const std::uint32_t dv = deg(c, v);
    if (du == 0 && dv == 0) return true;
    if (du != 0 && dv != 0) return false;
    const Vertex x = du != 0 ? u : v;
    const std::uint32_t dx = du != 0 ? du : dv;
    return dx >= 2 || deg(c, partner(c, x)) == 1;
  }

  void add(int c, Vertex u, Vertex v) {
    if (deg(c, u)++ == 0) partner(c, u) = v;
    if (deg(c, v)++ == 0) partner(c, v) = u;
  }

  void remove(int c, Vertex u, Vertex v) {
    --deg(c, u);
    --deg(c, v);
  }

  // Every unassigned edge must still fit some class. Feasibility of adding
  // an edge only shrinks as classes grow, so this is a valid cut.
  bool forward_check(std::size_t next, int opened) {
    const int limit = open_limit(opened);
    for (std::size_t e = next; e < g_.edge_count(); ++e) {
      const Edge& edge = g_.edges()[e];
      bool fits = false;
      for (int c = 0; c < limit && !fits; ++c) fits = can_add(c, edge.u, edge.v);
      if (!fits) return false;
    }
    return true;
  }

  bool descend(std::size_t e, int opened) {
    if (++nodes_ > cfg_.node_budget) throw InconclusiveError(nodes_);
    if (e == g_.edge_count()) return true;
    if (!forward_check(e, opened)) return false;
    const Edge& edge = g_.edges()[e];
    const int limit = open_limit(opened);
    for (int c = 0; c < limit; ++c) {
      if (!can_add(c, edge.u, edge.v)) continue;
      add(c, edge.u, edge.v);
      assignment_[e] = c;
      if (descend(e + 1, std::max(opened, c + 1))) return true;
      assignment_[e] = -1;
      remove(c, edge.u, edge.v);
    }
    return false;
  }

  const Graph& g_;
  int t_;
  SearchConfig cfg_;
  std::size_t n_;
  std::vector<std::uint32_t> degree_;
  std::vector<Vertex> partner_;
  std::vector<int> assignment_;
  std::uint64_t nodes_ = 0;
};

}  // namespace exact_detail

// Can E(g) be split into at most t star forests? Throws InconclusiveError
// when the node budget runs out.
inline DecideResult sa_decide(const Graph& g, int t, const SearchConfig& cfg = {}) {
  if (g.edge_count() > kMaxExactEdges) {
    throw CapacityError("exact search supports at most 64 edges");
  }
  if (t < 1) throw Error("class bound must be positive");
  if (cfg.node_budget == 0) throw Error("node budget must be positive");
  exact_detail::Search search(g, t, cfg);
  DecideResult result;
  result.feasible = search.run();
  result.nodes = search.nodes();
  if (result.feasible) {
    GalaxyDecomposition d{std::make_shared<const Graph>(g), {}, "exact"};
    int used = 0;
    for (int c : search.assignment()) used = std::max(used, c + 1);
    d.classes.resize(static_cast<std::size_t>(used));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      d.classes[static_cast<std::size_t>(search.assignment()[e])].push_back(g.edges()[e]);
    }
    d.classes.erase(std::remove_if(d.classes.begin(), d.classes.end(),
                                   [](const EdgeList& cls) { return cls.empty(); }),
                    d.classes.end());
    result.witness = std::move(d);
  }
  return result;
}

struct ExactResult {
  int value = 0;
  std::optional<GalaxyDecomposition> witness;  // absent for edgeless graphs
  std::uint64_t nodes = 0;
};

// Smallest feasible t, searching upward from the regular-graph bound
// ceil(d/2) + 1 when g is d-regular with d >= 2.
inline ExactResult exact_sa_with_witness(const Graph& g, const SearchConfig& cfg = {}) {
  if (g.edge_count() > kMaxExactEdges) {
    throw CapacityError("exact search supports at most 64 edges");
  }
  ExactResult out;
  if (g.edge_count() == 0) return out;
  int start = 1;
  const auto degrees = g.degrees();
  const std::size_t dmax = *std::max_element(degrees.begin(), degrees.end());
  const bool regular = std::all_of(degrees.begin(), degrees.end(),
                                   [dmax](std::size_t d) { return d == dmax; });
  if (regular && dmax >= 2) start = static_cast<int>((dmax + 1) / 2 + 1);
  for (int t = start; t <= cfg.max_classes; ++t) {
    SearchConfig step = cfg;
    step.node_budget = cfg.node_budget - out.nodes;
    if (step.node_budget == 0) throw InconclusiveError(out.nodes);
    DecideResult r;
    try {
      r = sa_decide(g, t, step);
    } catch (const InconclusiveError&) {
      throw InconclusiveError(cfg.node_budget);
    }
    out.nodes += r.nodes;
    if (r.feasible) {
      out.value = t;
      out.witness = std::move(r.witness);
      return out;
    }
  }
  throw ClassLimitError(cfg.max_classes);
}

inline int exact_sa(const Graph& g, const SearchConfig& cfg = {}) {
  return exact_sa_with_witness(g, cfg).value;
}

}  // namespace galaxy
