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

#include "galaxy/graph.hpp"

#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "oracles.hpp"

namespace galaxy {
namespace {

TEST(HypercubeTest, SmallSizes) {
  EXPECT_EQ(hypercube(1).vertex_count(), 2u);
  EXPECT_EQ(hypercube(1).edge_count(), 1u);
  EXPECT_EQ(hypercube(3).vertex_count(), 8u);
  EXPECT_EQ(hypercube(3).edge_count(), 12u);
  EXPECT_EQ(hypercube(6).vertex_count(), 64u);
  EXPECT_EQ(hypercube(6).edge_count(), 192u);
  EXPECT_EQ(hypercube(6).dimension(), 6);
}

TEST(HypercubeTest, MatchesHammingDistanceDefinition) {
  for (int n = 1; n <= 6; ++n) {
    const Graph q = hypercube(n);
    std::set<std::pair<Vertex, Vertex>> got;
    for (const Edge& e : q.edges()) got.insert({e.u, e.v});
    EXPECT_EQ(got, oracle::hypercube_edges(n)) << "n=" << n;
  }
}

TEST(HypercubeTest, RegularAndSorted) {
  for (int n = 1; n <= 12; ++n) {
    const Graph q = hypercube(n);
    for (std::size_t d : q.degrees()) ASSERT_EQ(d, static_cast<std::size_t>(n));
    EXPECT_EQ(q.edge_count(), static_cast<std::size_t>(n) << (n - 1));
    EXPECT_TRUE(std::adjacent_find(q.edges().begin(), q.edges().end(),
                                   [](const Edge& a, const Edge& b) { return !(a < b); }) ==
                q.edges().end());
  }
}

TEST(HypercubeTest, CapacityGuard) {
  EXPECT_THROW(hypercube(0), CapacityError);
  EXPECT_THROW(hypercube(25), CapacityError);
}

TEST(CartesianProductTest, SquareTimesEdgeIsCube) {
  EXPECT_EQ(cartesian_product(hypercube(2), hypercube(1)), hypercube(3));
  EXPECT_EQ(cartesian_product(hypercube(2), hypercube(1)).dimension(), 3);
}

TEST(CartesianProductTest, RecursiveDefinitionOfHypercube) {
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(cartesian_product(hypercube(n - 1), hypercube(1)), hypercube(n)) << "n=" << n;
  }
}

TEST(CartesianProductTest, IdentityFactor) {
  const Graph g = cycle_graph(5);
  const Graph p = cartesian_product(g, single_vertex());
  EXPECT_EQ(p.edge_count(), g.edge_count());
  EXPECT_EQ(p, g);
}

TEST(CartesianProductTest, EdgeCountFormula) {
  const Graph c4 = cycle_graph(4);
  const Graph p = cartesian_product(c4, c4);
  EXPECT_EQ(p.vertex_count(), 16u);
  EXPECT_EQ(p.edge_count(), 32u);
  const Graph k3 = complete_graph(3);
  const Graph p2 = path_graph(4);
  EXPECT_EQ(cartesian_product(k3, p2).edge_count(), 3 * 3 + 4 * 3u);
}

TEST(CartesianProductTest, CapacityGuard) {
  EXPECT_THROW(cartesian_product(hypercube(13), hypercube(12)), CapacityError);
}

TEST(GraphTest, CanonicalizesAndRejectsBadEdges) {
  const Graph g(3, {{2, 0}, {0, 2}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 2}));
  EXPECT_THROW(Graph(3, {{1, 1}}), StructureError);
  EXPECT_THROW(Graph(3, {{0, 3}}), StructureError);
}

TEST(AdjacencyTest, SortedNeighbors) {
  const Adjacency adj(hypercube(3));
  const auto n5 = adj.neighbors(5);
  EXPECT_EQ(std::vector<Vertex>(n5.begin(), n5.end()), (std::vector<Vertex>{1, 4, 7}));
}

}  // namespace
}  // namespace galaxy
