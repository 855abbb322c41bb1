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

// Vertex partition of Q_{2^k-2} into 2^{k-1} independent classes, any two of
// which induce a 2-regular subgraph, and the matchings derived from it.
//
// The partition comes from syndromes. Coordinate i of Q_{2^k-2} carries a
// label: the nonzero vectors of F_2^k other than 1, in increasing order. The
// syndrome of a vertex is the XOR of the labels of its set coordinates, and
// its class is the coset of the syndrome modulo {0, 1}, i.e. syndrome >> 1.
// Flipping a coordinate moves the syndrome by a label, which is never in the
// trivial coset (independence), and every nontrivial coset holds exactly two
// labels (two neighbors in every other class).

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galaxy/errors.hpp"
#include "galaxy/graph.hpp"

namespace galaxy {

class ClassPartition {
 public:
  ClassPartition(int k, std::vector<Vertex> labels) : k_(k), labels_(std::move(labels)) {}

  int k() const { return k_; }
  int dimension() const { return (1 << k_) - 2; }
  std::size_t class_count() const { return std::size_t{1} << (k_ - 1); }
  const std::vector<Vertex>& labels() const { return labels_; }

  // 0-based class index of a vertex of Q_{2^k-2}.
  std::size_t class_of(Vertex x) const {
    Vertex syndrome = 0;
    for (int bit = 0; x != 0; ++bit, x >>= 1) {
      if (x & 1) syndrome ^= labels_[bit];
    }
    return syndrome >> 1;
  }

  // Members of every class, ascending. Needs the hypercube to fit in memory.
  std::vector<std::vector<Vertex>> classes() const {
    if (dimension() > kMaxDimension) {
      throw CapacityError("partition of Q_" + std::to_string(dimension()) +
                          " is too large to materialize");
    }
    std::vector<std::vector<Vertex>> out(class_count());
    const Vertex count = Vertex{1} << dimension();
    for (Vertex x = 0; x < count; ++x) out[class_of(x)].push_back(x);
    return out;
  }

 private:
  int k_;
  std::vector<Vertex> labels_;
};

// Scans Q_{2^k-2} directly: classes independent, equal-sized, and any two of
// them inducing a 2-regular graph. Returns an explanation on failure.
inline std::optional<std::string> check_partition(const ClassPartition& p) {
  const int n = p.dimension();
  const std::size_t m = p.class_count();
  const Vertex count = Vertex{1} << n;
  std::vector<std::size_t> sizes(m, 0);
  std::vector<std::size_t> hits(m);
  for (Vertex x = 0; x < count; ++x) {
    const std::size_t own = p.class_of(x);
    ++sizes[own];
    std::fill(hits.begin(), hits.end(), 0);
    for (int bit = 0; bit < n; ++bit) ++hits[p.class_of(x ^ (Vertex{1} << bit))];
    if (hits[own] != 0) {
      return "vertex " + std::to_string(x) + " has a neighbor in its own class";
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (j != own && hits[j] != 2) {
        return "vertex " + std::to_string(x) + " has " + std::to_string(hits[j]) +
               " neighbors in class " + std::to_string(j);
      }
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (sizes[j] != count / m) return "class " + std::to_string(j) + " has wrong size";
  }
  return std::nullopt;
}

inline ClassPartition truszczynski_partition(int k) {
  if (k < 2 || k > 5) throw CapacityError("partition parameter k must be in [2, 5]");
  const Vertex excluded = 1;
  std::vector<Vertex> labels;
  for (Vertex v = 1; v < (Vertex{1} << k); ++v) {
    if (v != excluded) labels.push_back(v);
  }
  ClassPartition p(k, std::move(labels));

  // Label check: no label in the trivial coset, two labels per other coset.
  std::vector<int> per_coset(p.class_count(), 0);
  for (Vertex label : p.labels()) ++per_coset[label >> 1];
  bool labels_ok = per_coset[0] == 0;
  for (std::size_t j = 1; j < per_coset.size(); ++j) labels_ok = labels_ok && per_coset[j] == 2;
  if (!labels_ok) throw ConstructionError("syndrome labels do not cover cosets twice");
  // Direct scan where it is cheap.
  if (p.dimension() <= 14) {
    if (auto problem = check_partition(p)) throw ConstructionError(*problem);
  }
  return p;
}

// Splits the 2-regular bipartite graph induced by a ∪ b into two perfect
// matchings. Each cycle is walked from its minimum vertex toward the smaller
// neighbor, alternating matchings; the matching holding the first edge is
// m_ab when the start vertex lies in `a`, otherwise m_ba.
inline std::pair<EdgeList, EdgeList> split_two_regular(const Adjacency& adj,
                                                       const std::vector<Vertex>& a,
                                                       const std::vector<Vertex>& b) {
  constexpr std::uint8_t kNone = 0, kSideA = 1, kSideB = 2;
  std::vector<std::uint8_t> side(adj.vertex_count(), kNone);
  for (Vertex x : a) side[x] = kSideA;
  for (Vertex x : b) {
    if (side[x] != kNone) throw StructureError("vertex in both sides", x);
    side[x] = kSideB;
  }

  // Induced neighbors; each must have exactly two, both across.
  std::vector<Vertex> members;
  members.reserve(a.size() + b.size());
  members.insert(members.end(), a.begin(), a.end());
  members.insert(members.end(), b.begin(), b.end());
  std::sort(members.begin(), members.end());
  auto induced = [&](Vertex x) {
    std::pair<Vertex, Vertex> pair{0, 0};
    int found = 0;
    for (Vertex y : adj.neighbors(x)) {
      if (side[y] == kNone) continue;
      if (side[y] == side[x]) throw StructureError("induced edge inside one side", x);
      if (found == 2) throw StructureError("induced degree exceeds 2", x);
      (found == 0 ? pair.first : pair.second) = y;
      ++found;
    }
    if (found != 2) throw StructureError("induced degree below 2", x);
    return pair;  // neighbors come sorted, so first < second
  };

  EdgeList m_ab, m_ba;
  std::vector<std::uint8_t> visited(adj.vertex_count(), 0);
  for (Vertex start : members) {
    if (visited[start]) continue;
    EdgeList* first = side[start] == kSideA ? &m_ab : &m_ba;
    EdgeList* second = first == &m_ab ? &m_ba : &m_ab;
    Vertex prev = start;
    Vertex cur = induced(start).first;
    visited[start] = 1;
    bool use_first = true;
    (use_first ? first : second)->push_back(Edge::of(prev, cur));
    while (cur != start) {
      visited[cur] = 1;
      const auto [p, q] = induced(cur);
      const Vertex next = p == prev ? q : p;
      use_first = !use_first;
      (use_first ? first : second)->push_back(Edge::of(cur, next));
      prev = cur;
      cur = next;
    }
  }
  std::sort(m_ab.begin(), m_ab.end());
  std::sort(m_ba.begin(), m_ba.end());
  return {std::move(m_ab), std::move(m_ba)};
}

inline std::pair<EdgeList, EdgeList> split_two_regular(const Graph& g, const std::vector<Vertex>& a,
                                                       const std::vector<Vertex>& b) {
  return split_two_regular(Adjacency(g), a, b);
}

// The directed matchings A_i -> A_j over the base hypercube: arrow(i, j)
// lists, for each vertex of A_i, its matched partner in A_j as an edge
// (from, to). Index arithmetic is 0-based.
class ArrowTable {
 public:
  explicit ArrowTable(const ClassPartition& p)
      : m_(p.class_count()), classes_(p.classes()), arrows_(m_ * m_) {
    const Graph base = hypercube(p.dimension());
    const Adjacency adj(base);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        auto [m_ij, m_ji] = split_two_regular(adj, classes_[i], classes_[j]);
        arrows_[i * m_ + j] = orient(m_ij, i, p);
        arrows_[j * m_ + i] = orient(m_ji, j, p);
      }
    }
  }

  std::size_t class_count() const { return m_; }
  const std::vector<std::vector<Vertex>>& classes() const { return classes_; }

  // Pairs (from in A_i, to in A_j), sorted by `from`.
  const std::vector<std::pair<Vertex, Vertex>>& arrow(std::size_t i, std::size_t j) const {
    return arrows_[i * m_ + j];
  }

 private:
  static std::vector<std::pair<Vertex, Vertex>> orient(const EdgeList& matching, std::size_t from,
                                                       const ClassPartition& p) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(matching.size());
    for (const Edge& e : matching) {
      if (p.class_of(e.u) == from) {
        out.emplace_back(e.u, e.v);
      } else {
        out.emplace_back(e.v, e.u);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t m_;
  std::vector<std::vector<Vertex>> classes_;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> arrows_;
};

// 3-bit suffix appended to a vertex of Q_{2^k-2}. Bit 0 is the first of the
// three appended coordinates, so the written codeword "b1 b2 b3" has value
// b1 + 2 b2 + 4 b3 and flip(c, i) toggles b_i.
using Codeword = unsigned;

constexpr Codeword codeword(const char (&bits)[4]) {
  return static_cast<Codeword>((bits[0] == '1') | ((bits[1] == '1') << 1) |
                               ((bits[2] == '1') << 2));
}

constexpr Codeword flip(Codeword c, int i) { return c ^ (1u << (i - 1)); }
constexpr Codeword complement(Codeword c) { return c ^ 7u; }
constexpr bool is_even(Codeword c) { return std::popcount(c) % 2 == 0; }

struct ExtendedClass {
  std::size_t base = 0;  // 0-based class index
  Codeword suffix = 0;
  std::vector<Vertex> vertices;
};

// A_i(c): every vertex of A_i with c appended as the top three coordinates
// of Q_{2^k+1}.
inline ExtendedClass extend_class(const ClassPartition& p, std::size_t i, Codeword c) {
  if (i >= p.class_count()) throw Error("class index out of range");
  if (c > 7) throw Error("codeword must have 3 bits");
  const int shift = p.dimension();
  if (shift + 3 > kMaxDimension) throw CapacityError("extended class exceeds capacity");
  ExtendedClass out{i, c, {}};
  const Vertex count = Vertex{1} << shift;
  for (Vertex x = 0; x < count; ++x) {
    if (p.class_of(x) == i) out.vertices.push_back(x | (Vertex{c} << shift));
  }
  return out;
}

}  // namespace galaxy
