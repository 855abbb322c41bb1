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

// Galaxy decompositions from square colorings.
//
// In a proper coloring of G², two color classes induce a matching in G, so
// the quotient graph on the k colors is a subgraph of K_k, and each galaxy
// of K_k blows up to a galaxy of G.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galaxy/decomposition.hpp"
#include "galaxy/errors.hpp"
#include "galaxy/graph.hpp"

namespace galaxy {

// Same vertices; {u, v} is an edge iff 1 <= dist(u, v) <= 2.
inline Graph square(const Graph& g) {
  const Adjacency adj(g);
  EdgeList edges;
  std::vector<Vertex> reach;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    reach.clear();
    for (Vertex y : adj.neighbors(x)) {
      reach.push_back(y);
      for (Vertex z : adj.neighbors(y)) reach.push_back(z);
    }
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    for (Vertex y : reach) {
      if (y > x) edges.push_back({x, y});
    }
  }
  return Graph(g.vertex_count(), std::move(edges));
}

struct SquareColoring {
  std::shared_ptr<const Graph> graph;
  std::vector<std::uint32_t> colors;  // indexed by vertex
  std::uint32_t k = 0;
};

// First pair of vertices within distance 2 that share a color, if any.
// Uses the fact that two vertices are within distance 2 iff they lie in a
// common closed neighborhood.
inline std::optional<std::pair<Vertex, Vertex>> square_conflict(const Graph& g,
                                                                const std::vector<std::uint32_t>& colors) {
  if (colors.size() != g.vertex_count()) throw Error("coloring size does not match the graph");
  const Adjacency adj(g);
  std::map<std::uint32_t, Vertex> owner;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    owner.clear();
    owner[colors[x]] = x;
    for (Vertex y : adj.neighbors(x)) {
      auto [it, fresh] = owner.emplace(colors[y], y);
      if (!fresh) return std::pair{std::min(it->second, y), std::max(it->second, y)};
    }
  }
  return std::nullopt;
}

// Colors Q_{2^t-1} by syndromes: coordinate i carries the vector h_{i+1},
// the nonzero vectors of F_2^t in increasing order, and a vertex gets the
// XOR of the vectors of its set coordinates.
inline SquareColoring hamming_square_coloring(int t) {
  if (t < 2 || t > 4) throw CapacityError("hamming_square_coloring supports t in [2, 4]");
  const int n = (1 << t) - 1;
  SquareColoring col{std::make_shared<const Graph>(hypercube(n)), {}, 1u << t};
  const Vertex count = Vertex{1} << n;
  col.colors.resize(count);
  for (Vertex x = 0; x < count; ++x) {
    std::uint32_t syndrome = 0;
    for (int bit = 0; bit < n; ++bit) {
      if (x >> bit & 1) syndrome ^= static_cast<std::uint32_t>(bit + 1);
    }
    col.colors[x] = syndrome;
  }
  return col;
}

// K_n into ceil(n/2) + 1 galaxies for n >= 4.
//
// For n = 2m, with vertices a_i = i and b_i = m + i: galaxy F_i has centers
// a_i and b_i. For i < j, F_i takes a_j -> a_i and b_j -> b_i while F_j takes
// a_i -> b_j and b_i -> a_j, so every pair except {a_i, b_i} is covered
// once; the last galaxy is the matching {a_i b_i}. Odd n adds one star at
// the extra vertex.
inline GalaxyDecomposition complete_galaxy_decomposition(int n) {
  if (n < 1 || n > 64) throw CapacityError("complete_galaxy_decomposition supports n in [1, 64]");
  auto g = std::make_shared<const Graph>(complete_graph(static_cast<Vertex>(n)));
  GalaxyDecomposition d{g, {}, "complete(" + std::to_string(n) + ")"};
  if (n <= 3) {
    switch (n) {
      case 1: d.classes = {{}}; break;
      case 2: d.classes = {{{0, 1}}}; break;
      case 3: d.classes = {{{0, 1}, {0, 2}}, {{1, 2}}}; break;
    }
    certify(d);
    return d;
  }
  const int even = n - n % 2;
  const Vertex m = static_cast<Vertex>(even / 2);
  auto a = [](Vertex i) { return i; };
  auto b = [m](Vertex i) { return m + i; };
  d.classes.assign(m + 1, {});
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) {
      d.classes[i].push_back(Edge::of(a(j), a(i)));
      d.classes[i].push_back(Edge::of(b(j), b(i)));
      d.classes[j].push_back(Edge::of(a(i), b(j)));
      d.classes[j].push_back(Edge::of(b(i), a(j)));
    }
    d.classes[m].push_back(Edge::of(a(i), b(i)));
  }
  if (n % 2 == 1) {
    EdgeList star;
    for (Vertex x = 0; x + 1 < static_cast<Vertex>(n); ++x) star.push_back({x, static_cast<Vertex>(n - 1)});
    d.classes.push_back(std::move(star));
  }
  normalize(d);
  certify(d);
  return d;
}

// Every pair of color classes induces a graph of maximum degree <= 1.
// Returns the first vertex with two same-colored neighbors, if any.
inline std::optional<Vertex> pairwise_matching_violation(const Graph& g,
                                                         const std::vector<std::uint32_t>& colors) {
  const Adjacency adj(g);
  std::vector<std::uint32_t> seen;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    seen.clear();
    for (Vertex y : adj.neighbors(x)) seen.push_back(colors[y]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return x;
  }
  return std::nullopt;
}

// Blows up a galaxy decomposition of K_k to one of g. Each edge of g goes to
// the galaxy owning its quotient edge {color(u), color(v)}; empty galaxies
// are dropped.
inline GalaxyDecomposition sa_from_square_coloring(const Graph& g, const SquareColoring& col) {
  if (col.k < 4) throw Error("square-coloring route needs k >= 4 colors");
  if (col.colors.size() != g.vertex_count()) throw Error("coloring size does not match the graph");
  for (std::uint32_t c : col.colors) {
    if (c >= col.k) throw Error("color index out of range");
  }
  if (auto conflict = square_conflict(g, col.colors)) {
    throw ColoringError(conflict->first, conflict->second);
  }
  if (auto x = pairwise_matching_violation(g, col.colors)) {
    throw StructureError("two neighbors share a color", *x);
  }

  const GalaxyDecomposition quotient = complete_galaxy_decomposition(static_cast<int>(col.k));
  std::map<Edge, std::size_t> owner;
  for (std::size_t c = 0; c < quotient.classes.size(); ++c) {
    for (const Edge& e : quotient.classes[c]) owner[e] = c;
  }

  auto graph = std::make_shared<const Graph>(g);
  GalaxyDecomposition d{graph, std::vector<EdgeList>(quotient.classes.size()),
                        "square-coloring(k=" + std::to_string(col.k) + ")"};
  for (const Edge& e : g.edges()) {
    const Edge q = Edge::of(col.colors[e.u], col.colors[e.v]);
    d.classes[owner.at(q)].push_back(e);
  }
  d.classes.erase(std::remove_if(d.classes.begin(), d.classes.end(),
                                 [](const EdgeList& cls) { return cls.empty(); }),
                  d.classes.end());
  certify(d);
  return d;
}

}  // namespace galaxy
