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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "tablegraph/algorithms.h"
#include "tablegraph/convert.h"
#include "tablegraph/error.h"
#include "tablegraph/synthetic.h"
#include "tablegraph/table_ops.h"
#include "test_util.h"

namespace tablegraph {
namespace {

Table edges(std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
  Table t(Schema::parse("src:int,dst:int"));
  for (auto [s, d] : pairs) t.append_row({Value(s), Value(d)});
  return t;
}

std::vector<std::pair<std::int64_t, std::int64_t>> pairs_of(const Table& t) {
  std::vector<std::pair<std::int64_t, std::int64_t>> p;
  for (std::size_t r = 0; r < t.row_count(); ++r) p.emplace_back(t.ints(0)[r], t.ints(1)[r]);
  return p;
}

TEST(ConvertTest, BuildsDeduplicatedGraph) {
  Table t = edges({{1, 2}, {1, 2}, {2, 3}, {3, 3}, {-5, 1}});
  BuildStats stats;
  Graph g = table_to_graph(t, {"src", "dst"}, 2, &stats);
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.has_edge(3, 3));
  EXPECT_TRUE(g.has_edge(-5, 1));
  EXPECT_TRUE(g.is_consistent());
  EXPECT_EQ(stats.rows, 5u);
  EXPECT_EQ(stats.edges, 4u);
  EXPECT_EQ(stats.nodes, 4u);
  EXPECT_TRUE(stats.exact_sizing);
}

TEST(ConvertTest, HandlesExtremeIds) {
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  Table t = edges({{kMin, kMax}, {kMax, 0}, {0, kMin}});
  Graph g = table_to_graph(t, {"src", "dst"}, 1);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_TRUE(g.has_edge(kMin, kMax));
  EXPECT_EQ(pairs_of(graph_to_edge_table(g, 1)),
            (std::vector<std::pair<std::int64_t, std::int64_t>>{{kMin, kMax}, {0, kMin}, {kMax, 0}}));
}

TEST(ConvertTest, EmptyTableGivesEmptyGraph) {
  Graph g = table_to_graph(edges({}), {"src", "dst"}, 4);
  EXPECT_TRUE(g.empty());
  EXPECT_EQ(graph_to_edge_table(g, 4).row_count(), 0u);
}

TEST(ConvertTest, RejectsBadColumns) {
  Table t(Schema::parse("src:int,dst:str"));
  auto code = [&](EdgeSpec spec) {
    try {
      table_to_graph(t, spec, 1);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code({"src", "dst"}), ErrorCode::kTypeMismatch);
  EXPECT_EQ(code({"src", "x"}), ErrorCode::kUnknownColumn);
}

TEST(ConvertTest, RoundTripsAndWorkerIndependence) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    Table t = random_edge_table(300, 2000, rng());
    auto expect = pairs_of(t);
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    Graph g1 = table_to_graph(t, {"src", "dst"}, 1);
    Graph g4 = table_to_graph(t, {"src", "dst"}, 4);
    EXPECT_TRUE(g1 == g4);
    Table back = graph_to_edge_table(g1, 3);
    EXPECT_EQ(pairs_of(back), expect);
    EXPECT_TRUE(table_to_graph(back, {"src", "dst"}, 2) == g1);
  }
}

TEST(ConvertTest, NodeTable) {
  Graph g;
  g.add_edge(2, 1);
  g.add_edge(2, 3);
  g.add_node(9);
  Table nodes = graph_to_node_table(g, 2);
  EXPECT_EQ(nodes.schema().to_string(), "node:int,out_degree:int,in_degree:int");
  EXPECT_EQ(nodes.row(1), (std::vector<Value>{Value(std::int64_t{2}), Value(std::int64_t{2}),
                                              Value(std::int64_t{0})}));
  NodeMap<double> pr = pagerank(g);
  Table with = graph_to_node_table(g, pr, "rank", 1);
  EXPECT_EQ(with.schema()[3].name, "rank");
  EXPECT_EQ(with.floats(3)[3], pr.at(9));
  NodeMap<double> partial({1, 2}, {0.5, 0.5});
  try {
    graph_to_node_table(g, partial, "rank", 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCoverage);
  }
}

TEST(ConvertTest, PageRankOfTwoCycleAsTable) {
  Graph g;
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  Table t = table_from_map(pagerank(g), "node", "score");
  ASSERT_EQ(t.row_count(), 2u);
  EXPECT_EQ(t.ints(0)[0], 0);
  EXPECT_DOUBLE_EQ(t.floats(1)[0], 0.5);
  EXPECT_DOUBLE_EQ(t.floats(1)[1], 0.5);
}

}  // namespace
}  // namespace tablegraph
