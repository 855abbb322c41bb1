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

// Slow, obviously-correct reference checks used only by the tests. Nothing
// here calls into the verifier or the search it is checking.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "galaxy/graph.hpp"

namespace galaxy::oracle {

// Explicit component search: a star forest has no repeated edge, and every
// connected component has at most one vertex of degree >= 2 and is a tree.
inline bool is_star_forest(const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::set<std::pair<Vertex, Vertex>> unique;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto [a, b] : edges) {
    if (a == b) return false;
    auto key = std::minmax(a, b);
    if (!unique.insert(key).second) return false;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<Vertex> done;
  for (const auto& [start, unused] : adj) {
    if (done.count(start)) continue;
    std::vector<Vertex> stack{start};
    std::set<Vertex> comp{start};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[x]) {
        if (comp.insert(y).second) stack.push_back(y);
      }
    }
    std::size_t high = 0, degree_sum = 0;
    for (Vertex x : comp) {
      high += adj[x].size() >= 2;
      degree_sum += adj[x].size();
    }
    if (high > 1) return false;
    if (degree_sum / 2 != comp.size() - 1) return false;  // not a tree
    done.insert(comp.begin(), comp.end());
  }
  return true;
}

inline bool is_star_forest(const EdgeList& edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return is_star_forest(pairs);
}

// Partition check by counting: every graph edge in exactly one class and
// no foreign edges.
inline bool is_partition(const Graph& g, const std::vector<EdgeList>& classes) {
  std::map<std::pair<Vertex, Vertex>, int> count;
  for (const Edge& e : g.edges()) count[{e.u, e.v}] = 0;
  for (const EdgeList& cls : classes) {
    for (const Edge& e : cls) {
      auto key = std::minmax(e.u, e.v);
      auto it = count.find({key.first, key.second});
      if (it == count.end()) return false;
      ++it->second;
    }
  }
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
}

inline bool is_valid_decomposition(const Graph& g, const std::vector<EdgeList>& classes) {
  if (!is_partition(g, classes)) return false;
  return std::all_of(classes.begin(), classes.end(),
                     [](const EdgeList& c) { return oracle::is_star_forest(c); });
}

// The violation categories a correct verifier must report, by name:
// edge-not-in-graph, duplicate-edge, uncovered-edge, not-a-star.
inline std::set<std::string> expected_violation_kinds(const Graph& g,
                                                      const std::vector<EdgeList>& classes) {
  std::set<std::pair<Vertex, Vertex>> graph_edges;
  for (const Edge& e : g.edges()) graph_edges.insert({e.u, e.v});
  std::map<std::pair<Vertex, Vertex>, int> uses;
  std::set<std::string> kinds;
  for (const EdgeList& cls : classes) {
    std::set<std::pair<Vertex, Vertex>> local;
    for (const Edge& e : cls) {
      auto key = std::minmax(e.u, e.v);
      std::pair<Vertex, Vertex> p{key.first, key.second};
      if (!local.insert(p).second) kinds.insert("duplicate-edge");
      if (!graph_edges.count(p)) kinds.insert("edge-not-in-graph");
    }
    for (const auto& p : local) {
      if (graph_edges.count(p)) ++uses[p];
    }
    std::vector<std::pair<Vertex, Vertex>> unique(local.begin(), local.end());
    if (!is_star_forest(unique)) kinds.insert("not-a-star");
  }
  for (const auto& p : graph_edges) {
    const int u = uses.count(p) ? uses[p] : 0;
    if (u == 0) kinds.insert("uncovered-edge");
    if (u > 1) kinds.insert("duplicate-edge");
  }
  return kinds;
}

// Tries every assignment of edges to t labelled classes.
inline bool naive_feasible(const Graph& g, int t) {
  const std::size_t m = g.edge_count();
  std::vector<int> label(m, 0);
  while (true) {
    std::vector<EdgeList> classes(t);
    for (std::size_t e = 0; e < m; ++e) classes[label[e]].push_back(g.edges()[e]);
    if (std::all_of(classes.begin(), classes.end(),
                    [](const EdgeList& c) { return oracle::is_star_forest(c); })) {
      return true;
    }
    std::size_t i = 0;
    while (i < m && ++label[i] == t) label[i++] = 0;
    if (i == m) return false;
  }
}

inline int naive_sa(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  for (int t = 1;; ++t) {
    if (naive_feasible(g, t)) return t;
  }
}

// Hypercube by definition: vertices at Hamming distance 1.
inline std::set<std::pair<Vertex, Vertex>> hypercube_edges(int n) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 0; a < (Vertex{1} << n); ++a) {
    for (Vertex b = a + 1; b < (Vertex{1} << n); ++b) {
      if (__builtin_popcount(a ^ b) == 1) out.insert({a, b});
    }
  }
  return out;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  EdgeList edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::of(perm[e.u], perm[e.v]));
  return Graph(g.vertex_count(), std::move(edges));
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace galaxy::oracle
