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

#include "galaxy/partition.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

namespace galaxy {
namespace {

// Independent check straight from the definition: each class independent,
// and any two classes induce a graph where every vertex has degree 2.
void expect_partition_properties(const ClassPartition& p) {
  const auto classes = p.classes();
  const Graph q = hypercube(p.dimension());
  std::vector<std::size_t> cls(q.vertex_count());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Vertex x : classes[i]) cls[x] = i;
  }
  const std::size_t m = classes.size();
  std::vector<std::size_t> count(q.vertex_count() * m, 0);
  for (const Edge& e : q.edges()) {
    ASSERT_NE(cls[e.u], cls[e.v]) << "edge inside a class";
    ++count[e.u * m + cls[e.v]];
    ++count[e.v * m + cls[e.u]];
  }
  for (Vertex x = 0; x < q.vertex_count(); ++x) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j != cls[x]) ASSERT_EQ(count[x * m + j], 2u) << "vertex " << x << " class " << j;
    }
  }
}

TEST(PartitionTest, K2Diagonals) {
  const ClassPartition p = truszczynski_partition(2);
  EXPECT_EQ(p.dimension(), 2);
  auto classes = p.classes();
  std::set<std::vector<Vertex>> got(classes.begin(), classes.end());
  EXPECT_EQ(got, (std::set<std::vector<Vertex>>{{0b00, 0b11}, {0b01, 0b10}}));
}

TEST(PartitionTest, K3SixteenEach) {
  const ClassPartition p = truszczynski_partition(3);
  EXPECT_EQ(p.dimension(), 6);
  ASSERT_EQ(p.class_count(), 4u);
  for (const auto& c : p.classes()) EXPECT_EQ(c.size(), 16u);
  expect_partition_properties(p);
  EXPECT_FALSE(check_partition(p).has_value());
}

TEST(PartitionTest, K4Checks) {
  const ClassPartition p = truszczynski_partition(4);
  EXPECT_EQ(p.dimension(), 14);
  ASSERT_EQ(p.class_count(), 8u);
  for (const auto& c : p.classes()) EXPECT_EQ(c.size(), 2048u);
  expect_partition_properties(p);
}

TEST(PartitionTest, K5IsLabelOnly) {
  const ClassPartition p = truszczynski_partition(5);
  EXPECT_EQ(p.dimension(), 30);
  EXPECT_EQ(p.class_count(), 16u);
  EXPECT_THROW(p.classes(), CapacityError);
  EXPECT_THROW(truszczynski_partition(1), CapacityError);
}

TEST(PartitionTest, BrokenLabelsAreRejected) {
  ClassPartition p = truszczynski_partition(3);
  std::vector<Vertex> labels = p.labels();
  std::swap(labels[0], labels.back());
  labels[0] = labels[1];
  EXPECT_TRUE(check_partition(ClassPartition(3, labels)).has_value());
}

TEST(SplitTwoRegularTest, SquareDiagonals) {
  const Graph q2 = hypercube(2);
  auto [ab, ba] = split_two_regular(q2, {0b00, 0b11}, {0b01, 0b10});
  EXPECT_EQ(ab.size(), 2u);
  EXPECT_EQ(ba.size(), 2u);
  EdgeList all = ab;
  all.insert(all.end(), ba.begin(), ba.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, q2.edges());
}

TEST(SplitTwoRegularTest, RejectsNonRegular) {
  const Graph p = path_graph(3);
  EXPECT_THROW(split_two_regular(p, {0, 2}, {1}), StructureError);
}

TEST(SplitTwoRegularTest, SwapExchangesMatchings) {
  const ClassPartition p = truszczynski_partition(3);
  const auto classes = p.classes();
  const Graph q = hypercube(6);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      auto [ab, ba] = split_two_regular(q, classes[i], classes[j]);
      EXPECT_EQ(ab.size(), 16u);
      EXPECT_EQ(ba.size(), 16u);
      auto [ab2, ba2] = split_two_regular(q, classes[j], classes[i]);
      std::set<Edge> s1(ab.begin(), ab.end()), s2(ab2.begin(), ab2.end());
      std::set<Edge> t1(ba.begin(), ba.end()), t2(ba2.begin(), ba2.end());
      std::set<Edge> u1 = s1, u2 = s2;
      u1.insert(t1.begin(), t1.end());
      u2.insert(t2.begin(), t2.end());
      EXPECT_EQ(u1, u2);
    }
  }
}

// Every vertex of A_i appears exactly once as a tail in each A_i -> A_j,
// and the union of all arrows covers E(Q) exactly once.
TEST(ArrowTableTest, CoversEachEdgeOnce) {
  for (int k = 2; k <= 3; ++k) {
    const ClassPartition p = truszczynski_partition(k);
    const ArrowTable arrows(p);
    const std::size_t m = arrows.class_count();
    std::map<Edge, int> seen;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        std::set<Vertex> tails;
        for (auto [from, to] : arrows.arrow(i, j)) {
          EXPECT_EQ(p.class_of(from), i);
          EXPECT_EQ(p.class_of(to), j);
          tails.insert(from);
          ++seen[Edge::of(from, to)];
        }
        EXPECT_EQ(tails.size(), arrows.classes()[i].size());
      }
    }
    const Graph q = hypercube(p.dimension());
    EXPECT_EQ(seen.size(), q.edge_count());
    for (const auto& [e, c] : seen) {
      EXPECT_EQ(c, 1);
      EXPECT_TRUE(q.has_edge(e));
    }
  }
}

TEST(CodewordTest, Helpers) {
  EXPECT_EQ(codeword("000"), 0u);
  EXPECT_EQ(codeword("100"), 1u);
  EXPECT_EQ(codeword("001"), 4u);
  EXPECT_EQ(flip(codeword("000"), 1), codeword("100"));
  EXPECT_EQ(flip(codeword("011"), 3), codeword("010"));
  EXPECT_EQ(complement(codeword("110")), codeword("001"));
  EXPECT_TRUE(is_even(codeword("101")));
  EXPECT_FALSE(is_even(codeword("111")));
}

TEST(ExtendClassTest, FirstClassOfSquare) {
  const ClassPartition p = truszczynski_partition(2);
  const std::size_t i = p.class_of(0);
  const ExtendedClass ext = extend_class(p, i, codeword("000"));
  EXPECT_EQ(ext.vertices, (std::vector<Vertex>{0b00, 0b11}));
  const ExtendedClass top = extend_class(p, i, codeword("001"));
  EXPECT_EQ(top.vertices, (std::vector<Vertex>{0b10000, 0b10011}));
}

TEST(ExtendClassTest, LiftedClassesPartitionTheBiggerCube) {
  const ClassPartition p = truszczynski_partition(3);
  std::vector<int> hit(1u << 9, 0);
  for (std::size_t i = 0; i < p.class_count(); ++i) {
    for (Codeword c = 0; c < 8; ++c) {
      for (Vertex x : extend_class(p, i, c).vertices) {
        ++hit[x];
        EXPECT_EQ(x >> 6, c);
      }
    }
  }
  for (int h : hit) EXPECT_EQ(h, 1);
  EXPECT_THROW(extend_class(p, 4, 0), Error);
  EXPECT_THROW(extend_class(p, 0, 8), Error);
}

}  // namespace
}  // namespace galaxy
