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

// Galaxy decompositions of hypercubes. Every function here returns output
// that has passed verify_decomposition, or throws ConstructionError.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "galaxy/decomposition.hpp"
#include "galaxy/errors.hpp"
#include "galaxy/graph.hpp"
#include "galaxy/partition.hpp"

namespace galaxy {

inline GalaxyDecomposition product_compose(const GalaxyDecomposition& dg,
                                           const GalaxyDecomposition& dh);

// Q_1, Q_2 and Q_3 with 1, 2 and 3 classes.
inline GalaxyDecomposition decompose_base(int n) {
  if (n < 1 || n > 3) throw Error("base decompositions exist for n in {1, 2, 3}");
  if (n == 3) {
    GalaxyDecomposition d = product_compose(decompose_base(2), decompose_base(1));
    d.provenance = "Base(3)";
    return d;
  }
  auto g = std::make_shared<const Graph>(hypercube(n));
  GalaxyDecomposition d{g, std::vector<EdgeList>(n), "Base(" + std::to_string(n) + ")"};
  // One class per coordinate direction: each is a perfect matching.
  for (const Edge& e : g->edges()) {
    d.classes[std::countr_zero(e.u ^ e.v)].push_back(e);
  }
  certify(d);
  return d;
}

// Q_{2^k-2} into 2^{k-1} classes. Class i collects A_i -> A_j for every
// j != i, so each component is a star centered in A_i with 2^{k-1}-1 leaves.
inline GalaxyDecomposition decompose_power_minus2(int k) {
  if (k < 2 || k > 4) throw CapacityError("decompose_power_minus2 supports k in [2, 4]");
  const ClassPartition p = truszczynski_partition(k);
  const ArrowTable arrows(p);
  const std::size_t m = arrows.class_count();
  GalaxyDecomposition d{std::make_shared<const Graph>(hypercube(p.dimension())),
                        std::vector<EdgeList>(m), "PowerMinus2(" + std::to_string(k) + ")"};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      for (auto [from, to] : arrows.arrow(i, j)) d.classes[i].push_back(Edge::of(from, to));
    }
  }
  normalize(d);
  certify(d);
  return d;
}

// V_1, V_2, V_3 of a graph that decomposes into two galaxies of K_{1,3}'s.
struct TripartiteWitness {
  std::vector<Vertex> v1;
  std::vector<Vertex> v2;
  std::vector<Vertex> v3;
};

// Checks the three tripartite conditions and throws WitnessError naming the
// first one that fails.
inline void check_witness(const Graph& g, const Adjacency& adj, const TripartiteWitness& w) {
  std::vector<std::uint8_t> part(g.vertex_count(), 0);
  auto assign = [&](const std::vector<Vertex>& set, std::uint8_t tag) {
    for (Vertex x : set) {
      if (x >= g.vertex_count()) throw WitnessError(1, x, "vertex out of range");
      if (part[x] != 0) throw WitnessError(1, x, "vertex in two parts");
      part[x] = tag;
    }
  };
  assign(w.v1, 1);
  assign(w.v2, 2);
  assign(w.v3, 3);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (part[x] == 0 && adj.degree(x) > 0) throw WitnessError(1, x, "vertex in no part");
  }
  for (const Edge& e : g.edges()) {
    if (part[e.u] == part[e.v]) throw WitnessError(1, e.u, "edge inside a part");
  }
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (part[x] == 0) continue;
    const std::size_t want = part[x] == 3 ? 2 : 4;
    if (adj.degree(x) != want) {
      throw WitnessError(2, x, "degree " + std::to_string(adj.degree(x)) + ", expected " +
                                   std::to_string(want));
    }
    std::array<int, 4> by_part{};
    for (Vertex y : adj.neighbors(x)) ++by_part[part[y]];
    if (part[x] == 3) {
      if (by_part[1] != 1 || by_part[2] != 1) {
        throw WitnessError(3, x, "third-part vertex not adjacent to both other parts");
      }
    } else if (by_part[3] != 2) {
      throw WitnessError(3, x, "expected exactly 2 neighbors in the third part");
    }
  }
}

// Two galaxies covering a graph that satisfies the tripartite conditions:
// the cycles on V_1 ∪ V_2 split into matchings M_1, M_2, then
// class1 = M_1 ∪ E(V_1, V_3) and class2 = M_2 ∪ E(V_2, V_3).
inline std::pair<EdgeList, EdgeList> lg1_decompose(const Graph& g, const TripartiteWitness& w) {
  const Adjacency adj(g);
  check_witness(g, adj, w);
  auto [m1, m2] = split_two_regular(adj, w.v1, w.v2);
  std::vector<std::uint8_t> in_v3(g.vertex_count(), 0);
  for (Vertex x : w.v3) in_v3[x] = 1;
  std::vector<std::uint8_t> in_v1(g.vertex_count(), 0);
  for (Vertex x : w.v1) in_v1[x] = 1;
  for (const Edge& e : g.edges()) {
    if (!in_v3[e.u] && !in_v3[e.v]) continue;
    const Vertex other = in_v3[e.u] ? e.v : e.u;
    (in_v1[other] ? m1 : m2).push_back(e);
  }
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  return {std::move(m1), std::move(m2)};
}

// Intermediate state of the Q_{2^k+1} construction, exposed so the two
// claims it rests on can be checked separately: every class in `galaxies`
// is a star forest, and `residual` satisfies the tripartite conditions
// under `witness`.
struct PowerPlusOneParts {
  int k = 0;
  std::vector<EdgeList> galaxies;  // 2^{k-1} classes
  Graph residual;
  TripartiteWitness witness;
};

inline PowerPlusOneParts power_plus1_parts(int k) {
  if (k < 2 || k > 4) throw CapacityError("decompose_power_plus1 supports k in [2, 4]");
  const ClassPartition p = truszczynski_partition(k);
  const ArrowTable arrows(p);
  const std::size_t m = arrows.class_count();
  const int shift = p.dimension();
  const int n = shift + 3;
  auto lift = [shift](Vertex x, Codeword c) { return x | (Vertex{c} << shift); };

  constexpr std::array<Codeword, 4> kEven = {codeword("000"), codeword("011"), codeword("110"),
                                             codeword("101")};

  PowerPlusOneParts parts;
  parts.k = k;
  parts.galaxies.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t next = (i + 1) % m;
    EdgeList& cls = parts.galaxies[i];
    for (Codeword c : kEven) {
      const Codeword c1 = flip(c, 1);
      // Stars centered in A_i(c): arrows to every other class, plus the
      // parallel edge into A_i(c^1).
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        for (auto [from, to] : arrows.arrow(i, j)) cls.push_back(Edge::of(lift(from, c), lift(to, c)));
      }
      for (Vertex x : arrows.classes()[i]) cls.push_back(Edge::of(lift(x, c), lift(x, c1)));
      // Stars centered in A_{i+1}(c^1), skipping classes i and i+1.
      for (std::size_t kappa = 0; kappa < m; ++kappa) {
        if (kappa == i || kappa == next) continue;
        for (auto [from, to] : arrows.arrow(next, kappa)) {
          cls.push_back(Edge::of(lift(from, c1), lift(to, c1)));
        }
      }
    }
    std::sort(cls.begin(), cls.end());
  }

  // Residual = E(Q_n) minus all galaxies.
  const Graph cube = hypercube(n);
  EdgeList used;
  for (const EdgeList& cls : parts.galaxies) used.insert(used.end(), cls.begin(), cls.end());
  std::sort(used.begin(), used.end());
  EdgeList rest;
  std::set_difference(cube.edges().begin(), cube.edges().end(), used.begin(), used.end(),
                      std::back_inserter(rest));
  parts.residual = Graph(cube.vertex_count(), std::move(rest));

  // V_1 holds odd-indexed (1-based even) classes at suffixes 001, 100 and
  // even-indexed classes at 010, 111; V_2 the opposite; V_3 every even suffix.
  constexpr std::array<Codeword, 2> kGroupX = {codeword("001"), codeword("100")};
  constexpr std::array<Codeword, 2> kGroupY = {codeword("010"), codeword("111")};
  for (std::size_t i = 0; i < m; ++i) {
    const bool one_based_even = (i + 1) % 2 == 0;
    for (Vertex x : arrows.classes()[i]) {
      for (Codeword c : kGroupX) (one_based_even ? parts.witness.v1 : parts.witness.v2).push_back(lift(x, c));
      for (Codeword c : kGroupY) (one_based_even ? parts.witness.v2 : parts.witness.v1).push_back(lift(x, c));
      for (Codeword c : kEven) parts.witness.v3.push_back(lift(x, c));
    }
  }
  std::sort(parts.witness.v1.begin(), parts.witness.v1.end());
  std::sort(parts.witness.v2.begin(), parts.witness.v2.end());
  std::sort(parts.witness.v3.begin(), parts.witness.v3.end());
  return parts;
}

// Q_{2^k+1} into 2^{k-1}+2 classes.
inline GalaxyDecomposition decompose_power_plus1(int k) {
  PowerPlusOneParts parts = power_plus1_parts(k);
  const int n = (1 << k) + 1;
  GalaxyDecomposition d{std::make_shared<const Graph>(hypercube(n)), std::move(parts.galaxies),
                        "PowerPlus1(" + std::to_string(k) + ")"};
  for (const EdgeList& cls : d.classes) {
    if (!is_star_forest(cls)) throw ConstructionError("PowerPlus1: a main class is not a galaxy");
  }
  try {
    auto [tail1, tail2] = lg1_decompose(parts.residual, parts.witness);
    d.classes.push_back(std::move(tail1));
    d.classes.push_back(std::move(tail2));
  } catch (const WitnessError& e) {
    throw ConstructionError(std::string("PowerPlus1: residual graph: ") + e.what());
  }
  certify(d);
  return d;
}

// G □ H: each class of dg is copied into every H-fiber, each class of dh
// into every G-fiber. Classes of dg come first.
inline GalaxyDecomposition product_compose(const GalaxyDecomposition& dg,
                                           const GalaxyDecomposition& dh) {
  const Graph& g = *dg.graph;
  const Graph& h = *dh.graph;
  auto product = std::make_shared<const Graph>(cartesian_product(g, h));
  const Vertex width = static_cast<Vertex>(g.vertex_count());
  GalaxyDecomposition d{product, {}, "Product(" + dg.provenance + "," + dh.provenance + ")"};
  d.classes.reserve(dg.classes.size() + dh.classes.size());
  for (const EdgeList& cls : dg.classes) {
    EdgeList out;
    out.reserve(cls.size() * h.vertex_count());
    for (Vertex b = 0; b < h.vertex_count(); ++b) {
      for (const Edge& e : cls) out.push_back({e.u + b * width, e.v + b * width});
    }
    d.classes.push_back(std::move(out));
  }
  for (const EdgeList& cls : dh.classes) {
    EdgeList out;
    out.reserve(cls.size() * width);
    for (Vertex a = 0; a < width; ++a) {
      for (const Edge& e : cls) out.push_back({a + e.u * width, a + e.v * width});
    }
    d.classes.push_back(std::move(out));
  }
  normalize(d);
  certify(d);
  return d;
}

inline int require_dimension(const GalaxyDecomposition& d) {
  if (!d.graph || !d.graph->dimension()) throw Error("decomposition is not over a hypercube");
  return *d.graph->dimension();
}

// Q_n -> Q_{n+1}: class i is doubled across both halves; the new class is
// the perfect matching along coordinate n.
inline GalaxyDecomposition extend_plus_one(const GalaxyDecomposition& d) {
  const int n = require_dimension(d);
  if (n + 1 > kMaxDimension) throw CapacityError("extend_plus_one exceeds capacity");
  GalaxyDecomposition out = product_compose(d, decompose_base(1));
  out.provenance = "PlusOne(" + d.provenance + ")";
  return out;
}

// Q_n -> Q_{n-1}: keep the edges inside the half with top coordinate 0 and
// drop classes that become empty.
inline GalaxyDecomposition restrict_minus_one(const GalaxyDecomposition& d) {
  const int n = require_dimension(d);
  if (n < 2) throw Error("restrict_minus_one needs n >= 2");
  const Vertex half = Vertex{1} << (n - 1);
  GalaxyDecomposition out{std::make_shared<const Graph>(hypercube(n - 1)), {},
                          "MinusOne(" + d.provenance + ")"};
  for (const EdgeList& cls : d.classes) {
    EdgeList kept;
    for (const Edge& e : cls) {
      if (e.v < half) kept.push_back(e);
    }
    if (!kept.empty()) out.classes.push_back(std::move(kept));
  }
  certify(out);
  return out;
}

}  // namespace galaxy
