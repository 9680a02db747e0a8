// Copyright 2026 The tablegraph Authors.
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

#include <random>

#include <gtest/gtest.h>

#include "oracles/graph_oracles.h"
#include "tablegraph/error.h"
#include "tablegraph/graph.h"

namespace tablegraph {
namespace {

std::vector<NodeId> vec(std::span<const NodeId> s) { return {s.begin(), s.end()}; }

TEST(GraphTest, AddEdgeCreatesNodesAndDeduplicates) {
  Graph g;
  EXPECT_TRUE(g.add_edge(1, 2));
  EXPECT_FALSE(g.add_edge(1, 2));
  EXPECT_TRUE(g.add_edge(2, 1));
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_FALSE(g.add_node(1));
}

TEST(GraphTest, CompleteTripleHasSixDirectedEdges) {
  Graph g;
  for (NodeId a : {0, 1, 2})
    for (NodeId b : {0, 1, 2})
      if (a != b) g.add_edge(a, b);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(vec(g.out_neighbors(0)), (std::vector<NodeId>{1, 2}));
  EXPECT_EQ(vec(g.in_neighbors(0)), (std::vector<NodeId>{1, 2}));
}

TEST(GraphTest, DeletingStarCenterRemovesAllEdges) {
  Graph g;
  for (NodeId leaf = 1; leaf <= 5; ++leaf) {
    g.add_edge(0, leaf);
    g.add_edge(leaf, 0);
  }
  g.add_edge(0, 0);
  EXPECT_EQ(g.edge_count(), 11u);
  EXPECT_TRUE(g.del_node(0));
  EXPECT_FALSE(g.del_node(0));
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.node_count(), 5u);
  EXPECT_TRUE(g.in_neighbors(3).empty());
  EXPECT_TRUE(g.is_consistent());
}

TEST(GraphTest, DelEdgeAndNeighborErrors) {
  Graph g;
  g.add_edge(4, 5);
  EXPECT_FALSE(g.del_edge(5, 4));
  EXPECT_TRUE(g.del_edge(4, 5));
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_TRUE(g.has_node(5));
  try {
    g.neighbors(9, Direction::kOut);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownNode);
  }
}

TEST(GraphTest, EqualityIgnoresInsertionOrder) {
  Graph a, b;
  a.add_edge(1, 2);
  a.add_edge(3, 1);
  b.add_edge(3, 1);
  b.add_edge(1, 2);
  EXPECT_TRUE(a == b);
  b.add_node(7);
  EXPECT_FALSE(a == b);
}

TEST(GraphTest, SortedViews) {
  Graph g;
  for (NodeId v : {9, -3, 4}) g.add_node(v);
  EXPECT_EQ(g.node_ids(), (std::vector<NodeId>{-3, 4, 9}));
  auto recs = g.sorted_records();
  EXPECT_EQ(recs[2]->id, 9);
}

TEST(GraphTest, FuzzAgainstMatrix) {
  constexpr std::size_t kIds = 24;
  std::mt19937_64 rng(99);
  Graph g;
  oracle::MatrixGraph m(kIds);
  for (int op = 0; op < 3000; ++op) {
    const NodeId a = static_cast<NodeId>(rng() % kIds);
    const NodeId b = static_cast<NodeId>(rng() % kIds);
    switch (rng() % 6) {
      case 0: ASSERT_EQ(g.add_node(a), m.add_node(a)); break;
      case 1: ASSERT_EQ(g.del_node(a), m.del_node(a)); break;
      case 2: ASSERT_EQ(g.del_edge(a, b), m.del_edge(a, b)); break;
      default: ASSERT_EQ(g.add_edge(a, b), m.add_edge(a, b)); break;
    }
    ASSERT_TRUE(m.matches(g)) << "after op " << op;
  }
  EXPECT_TRUE(g.is_consistent());
}

}  // namespace
}  // namespace tablegraph
