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

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galaxy/errors.hpp"

namespace galaxy {

// Largest hypercube dimension any operation will materialize.
inline constexpr int kMaxDimension = 24;
inline constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << kMaxDimension;

// Undirected edge in canonical orientation u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge of(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Finite simple undirected graph. Edges are kept sorted and unique; the
// object is immutable once built.
class Graph {
 public:
  Graph() = default;

  // Canonicalizes, sorts and deduplicates `edges`. Self-loops and endpoints
  // outside [0, vertex_count) are rejected.
  Graph(std::uint64_t vertex_count, EdgeList edges,
        std::optional<int> dimension = std::nullopt)
      : vertex_count_(vertex_count), dimension_(dimension) {
    if (vertex_count > kMaxVertices) {
      throw CapacityError("graph with " + std::to_string(vertex_count) +
                          " vertices exceeds capacity");
    }
    for (Edge& e : edges) {
      if (e.u == e.v) throw StructureError("self-loop", e.u);
      e = Edge::of(e.u, e.v);
      if (e.v >= vertex_count) throw StructureError("endpoint out of range", e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  std::uint64_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const EdgeList& edges() const { return edges_; }
  // Set when the graph is the hypercube of that dimension in the standard
  // bit encoding.
  std::optional<int> dimension() const { return dimension_; }

  bool has_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  // Position of `e` in edges(), if present.
  std::optional<std::size_t> edge_index(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> deg(vertex_count_, 0);
    for (const Edge& e : edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
    return deg;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::uint64_t vertex_count_ = 0;
  EdgeList edges_;
  std::optional<int> dimension_;
};

// Compressed adjacency lists; neighbors of each vertex sorted ascending.
class Adjacency {
 public:
  explicit Adjacency(const Graph& g) : offsets_(g.vertex_count() + 1, 0) {
    for (const Edge& e : g.edges()) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    targets_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : g.edges()) {
      targets_[fill[e.u]++] = e.v;
      targets_[fill[e.v]++] = e.u;
    }
    for (std::size_t x = 0; x + 1 < offsets_.size(); ++x) {
      std::sort(targets_.begin() + offsets_[x], targets_.begin() + offsets_[x + 1]);
    }
  }

  std::size_t vertex_count() const { return offsets_.size() - 1; }

  std::span<const Vertex> neighbors(Vertex x) const {
    return {targets_.data() + offsets_[x], offsets_[x + 1] - offsets_[x]};
  }

  std::size_t degree(Vertex x) const { return offsets_[x + 1] - offsets_[x]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

// Q_n: vertices are n-bit vectors, bit i is coordinate i; adjacent iff the
// vertices differ in exactly one bit.
inline Graph hypercube(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw CapacityError("hypercube dimension " + std::to_string(n) +
                        " outside [1, " + std::to_string(kMaxDimension) + "]");
  }
  const Vertex count = Vertex{1} << n;
  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(n) << (n - 1));
  for (Vertex x = 0; x < count; ++x) {
    for (int bit = 0; bit < n; ++bit) {
      const Vertex y = x ^ (Vertex{1} << bit);
      if (x < y) edges.push_back({x, y});
    }
  }
  return Graph(count, std::move(edges), n);
}

// Vertex (a, b) of G □ H is encoded as a + b·|V(G)|, so the left factor
// varies fastest and Q_m □ Q_n is literally Q_{m+n}.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0) {
    throw Error("cartesian product of an empty graph");
  }
  const std::uint64_t total = g.vertex_count() * h.vertex_count();
  if (total > kMaxVertices) {
    throw CapacityError("product with " + std::to_string(total) +
                        " vertices exceeds capacity");
  }
  const Vertex width = static_cast<Vertex>(g.vertex_count());
  EdgeList edges;
  edges.reserve(g.vertex_count() * h.edge_count() +
                h.vertex_count() * g.edge_count());
  for (Vertex b = 0; b < h.vertex_count(); ++b) {
    for (const Edge& e : g.edges()) edges.push_back({e.u + b * width, e.v + b * width});
  }
  for (Vertex a = 0; a < width; ++a) {
    for (const Edge& e : h.edges()) edges.push_back({a + e.u * width, a + e.v * width});
  }
  std::optional<int> dimension;
  if (g.dimension() && h.dimension()) dimension = *g.dimension() + *h.dimension();
  return Graph(total, std::move(edges), dimension);
}

// K_1 is the identity for the cartesian product.
inline Graph single_vertex() { return Graph(1, {}); }

inline Graph complete_graph(Vertex n) {
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(Vertex n) {
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back(Edge::of(u, (u + 1) % n));
  return Graph(n, std::move(edges));
}

inline Graph path_graph(Vertex n) {
  EdgeList edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, std::move(edges));
}

}  // namespace galaxy
