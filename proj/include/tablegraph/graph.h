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

#ifndef TABLEGRAPH_GRAPH_H_
#define TABLEGRAPH_GRAPH_H_

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "tablegraph/node_map.h"

namespace tablegraph {

enum class Direction { kIn, kOut };

// Both neighbor vectors are strictly ascending. A self-loop puts the node's
// own id in both of its vectors.
struct NodeRecord {
  NodeId id = 0;
  std::vector<NodeId> in;
  std::vector<NodeId> out;

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

/// Directed simple graph stored as a hash table of nodes, each holding sorted
/// in- and out-neighbor vectors. Parallel edges collapse; self-loops are
/// allowed. Inserting or deleting one edge costs time linear in the degrees
/// of its endpoints.
///
/// Mutation needs exclusive access; concurrent readers are fine otherwise.
class Graph {
 public:
  Graph() = default;

  // Adopts prebuilt records. The caller guarantees distinct ids, sorted
  // duplicate-free vectors and in/out symmetry (see is_consistent()).
  static Graph from_records(std::vector<NodeRecord> records);

  bool add_node(NodeId id);
  // Creates missing endpoints. Returns false if the edge already existed.
  bool add_edge(NodeId src, NodeId dst);
  bool del_edge(NodeId src, NodeId dst);
  // Removes the node and every incident edge.
  bool del_node(NodeId id);

  bool has_node(NodeId id) const { return nodes_.contains(id); }
  bool has_edge(NodeId src, NodeId dst) const;
  const NodeRecord* find(NodeId id) const;

  // Throws kUnknownNode.
  std::span<const NodeId> neighbors(NodeId id, Direction dir) const;
  std::span<const NodeId> out_neighbors(NodeId id) const {
    return neighbors(id, Direction::kOut);
  }
  std::span<const NodeId> in_neighbors(NodeId id) const {
    return neighbors(id, Direction::kIn);
  }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return nodes_.empty(); }

  // Ascending ids; the table itself is unordered.
  std::vector<NodeId> node_ids() const;
  // Records ordered by ascending id. Pointers stay valid until the next
  // mutation.
  std::vector<const NodeRecord*> sorted_records() const;

  template <typename Fn>
  void for_each_node(Fn&& fn) const {
    for (const auto& [id, rec] : nodes_) fn(rec);
  }

  void reserve(std::size_t nodes) { nodes_.reserve(nodes); }

  // Checks sortedness, in/out symmetry and the edge count in O(E log d).
  bool is_consistent() const;

  // Approximate heap footprint of the node table and adjacency vectors.
  std::size_t memory_bytes() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::unordered_map<NodeId, NodeRecord> nodes_;
  std::size_t edge_count_ = 0;
};

}  // namespace tablegraph

#endif  // TABLEGRAPH_GRAPH_H_
