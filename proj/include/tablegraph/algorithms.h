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

#ifndef TABLEGRAPH_ALGORITHMS_H_
#define TABLEGRAPH_ALGORITHMS_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <span>

#include "tablegraph/graph.h"
#include "tablegraph/node_map.h"
#include "tablegraph/parallel.h"

namespace tablegraph {

struct PageRankOptions {
  double damping = 0.85;
  int iterations = 10;
  unsigned workers = default_workers();
  // Called after each iteration with the 1-based iteration number and the
  // scores in ascending node-id order.
  std::function<void(int, std::span<const double>)> on_iteration;
};

/// Fixed-count power iteration starting from 1/N. Each round
///
///   score'(v) = (1 - d) / N + d * (sum_{u -> v} score(u) / outdeg(u)
///                                  + dangling / N)
///
/// where `dangling` is the total score of nodes without out-edges, so the
/// scores keep summing to one. Self-loops count as ordinary out-edges.
/// In-neighbor contributions are summed in ascending id order and the
/// dangling total in fixed blocks, so results are bitwise independent of the
/// worker count.
NodeMap<double> pagerank(const Graph& g, const PageRankOptions& options = {});

// Triangles of the symmetrized graph (u ~ v iff an edge exists either way),
// ignoring self-loops. Each triangle is found once, from its lowest
// (degree, id) vertex.
std::uint64_t triangle_count(const Graph& g, unsigned workers = default_workers());

inline constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();

// Hop distances along directed edges from `source` (breadth-first).
// Unreachable nodes map to kUnreachable. Throws kUnknownNode.
NodeMap<std::uint64_t> sssp(const Graph& g, NodeId source);

// Strongly connected components. Labels are 0..C-1 in the order components
// are completed by a depth-first search rooted at ascending node ids.
NodeMap<std::int64_t> scc(const Graph& g);

// Maximal subgraph whose nodes all have at least k distinct symmetrized
// neighbors (self-loops not counted), with every original edge among the
// survivors. Throws kInvalidArgument for k < 1.
Graph k_core(const Graph& g, std::int64_t k);

// Weakly connected components; labels 0..C-1 by ascending smallest member.
NodeMap<std::int64_t> connected_components(const Graph& g);

}  // namespace tablegraph

#endif  // TABLEGRAPH_ALGORITHMS_H_
