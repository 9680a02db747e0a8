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

#ifndef TABLEGRAPH_CONVERT_H_
#define TABLEGRAPH_CONVERT_H_

#include <string>

#include "tablegraph/graph.h"
#include "tablegraph/node_map.h"
#include "tablegraph/parallel.h"
#include "tablegraph/table.h"

namespace tablegraph {

// Integer columns holding edge sources and destinations.
struct EdgeSpec {
  std::string source;
  std::string destination;
};

// Diagnostics from one table_to_graph run.
struct BuildStats {
  std::size_t rows = 0;
  std::size_t edges = 0;  // distinct (source, destination) pairs
  std::size_t nodes = 0;
  // Every adjacency vector was filled to exactly its precomputed size.
  bool exact_sizing = false;
};

/// Builds a graph whose nodes are the distinct values of both columns and
/// whose edges are the distinct (source, destination) row pairs.
///
/// Sort-first construction: the two columns are copied as (src, dst) and
/// (dst, src) pairs and sorted in parallel; duplicate pairs are dropped and
/// each node's in/out degree is read off the sorted runs. The node slot map
/// and every adjacency vector are then allocated at their final size, filled
/// in parallel by claiming cells with an atomic cursor, and sorted per node.
/// Nothing is resized while workers run, so they never contend on a lock.
Graph table_to_graph(const Table& table, const EdgeSpec& spec,
                     unsigned workers = default_workers(),
                     BuildStats* stats = nullptr);

// Two int columns (src, dst), one row per edge, sorted by (src, dst). Workers
// own contiguous node ranges and write into disjoint slices of the
// preallocated output.
Table graph_to_edge_table(const Graph& g, unsigned workers = default_workers());

// Columns (node, out_degree, in_degree), one row per node, ascending by id.
Table graph_to_node_table(const Graph& g, unsigned workers = default_workers());

// As above plus a float column `value_name`. `values` must cover exactly the
// node set (kCoverage otherwise).
Table graph_to_node_table(const Graph& g, const NodeMap<double>& values,
                          const std::string& value_name,
                          unsigned workers = default_workers());

}  // namespace tablegraph

#endif  // TABLEGRAPH_CONVERT_H_
