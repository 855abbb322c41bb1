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

#include "galaxy/exact.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "galaxy/graph6.hpp"
#include "oracles.hpp"

namespace galaxy {
namespace {

TEST(DecideTest, Triangle) {
  const Graph k3 = complete_graph(3);
  EXPECT_FALSE(sa_decide(k3, 1).feasible);
  const auto r = sa_decide(k3, 2);
  ASSERT_TRUE(r.feasible);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(verify_decomposition(*r.witness).valid);
}

TEST(DecideTest, TreesNeedTwo) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Vertex n = std::uniform_int_distribution<Vertex>(2, 40)(rng);
    EdgeList edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v});
    const Graph tree(n, edges);
    const auto r = sa_decide(tree, 2);
    ASSERT_TRUE(r.feasible);
    EXPECT_TRUE(verify_decomposition(*r.witness).valid);
  }
}

TEST(DecideTest, FiveCycle) {
  EXPECT_TRUE(sa_decide(cycle_graph(5), 2).feasible);
}

TEST(DecideTest, BudgetIsInconclusive) {
  SearchConfig cfg;
  cfg.node_budget = 10;
  EXPECT_THROW(sa_decide(complete_graph(8), 4, cfg), InconclusiveError);
  EXPECT_THROW(sa_decide(hypercube(5), 3), CapacityError);
}

TEST(ExactTest, SmallCubes) {
  EXPECT_EQ(exact_sa(hypercube(2)), 2);
  EXPECT_EQ(exact_sa(hypercube(3)), 3);
  EXPECT_EQ(exact_sa(Graph(4, {})), 0);
}

TEST(ExactTest, CompleteGraphs) {
  for (Vertex n = 4; n <= 8; ++n) {
    const auto r = exact_sa_with_witness(complete_graph(n));
    EXPECT_EQ(r.value, static_cast<int>((n + 1) / 2 + 1)) << "n=" << n;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(oracle::is_valid_decomposition(complete_graph(n), r.witness->classes));
  }
}

TEST(ExactTest, ClassLimit) {
  SearchConfig cfg;
  cfg.max_classes = 2;
  EXPECT_THROW(exact_sa(complete_graph(4), cfg), ClassLimitError);
}

TEST(ExactTest, SymmetryBreakingDoesNotChangeValue) {
  SearchConfig plain;
  plain.symmetry_breaking = false;
  for (Vertex n = 3; n <= 6; ++n) {
    EXPECT_EQ(exact_sa(complete_graph(n), plain), exact_sa(complete_graph(n)));
  }
}

// Full agreement with the labelled brute force on the small-graph corpus.
TEST(ExactOracleTest, CorpusAgreement) {
  int checked = 0;
  for (const std::string& line : oracle::read_lines(GALAXY_TEST_DATA "/graphs_upto6.g6")) {
    const Graph g = parse_graph6(line);
    if (g.edge_count() > 9) continue;
    const auto r = exact_sa_with_witness(g);
    ASSERT_EQ(r.value, oracle::naive_sa(g)) << line;
    if (r.witness) {
      ASSERT_TRUE(oracle::is_valid_decomposition(g, r.witness->classes)) << line;
      ASSERT_LE(static_cast<int>(r.witness->class_count()), r.value);
    }
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(ExactOracleTest, IsomorphismInvariance) {
  std::mt19937 rng(17);
  const auto lines = oracle::read_lines(GALAXY_TEST_DATA "/graphs_upto6.g6");
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = parse_graph6(lines[std::uniform_int_distribution<std::size_t>(0, lines.size() - 1)(rng)]);
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(exact_sa(g), exact_sa(oracle::relabel(g, perm)));
  }
  std::vector<Vertex> perm(8);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  EXPECT_EQ(exact_sa(oracle::relabel(hypercube(3), perm)), 3);
}

}  // namespace
}  // namespace galaxy
