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

#include "tablegraph/graph.h"

#include <algorithm>
#include <string>

#include "tablegraph/error.h"

namespace tablegraph {
namespace {

bool sorted_insert(std::vector<NodeId>& v, NodeId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) return false;
  v.insert(it, x);
  return true;
}

bool sorted_erase(std::vector<NodeId>& v, NodeId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) return false;
  v.erase(it);
  return true;
}

bool sorted_contains(const std::vector<NodeId>& v, NodeId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

Graph Graph::from_records(std::vector<NodeRecord> records) {
  Graph g;
  g.nodes_.reserve(records.size());
  for (NodeRecord& rec : records) {
    g.edge_count_ += rec.out.size();
    const NodeId id = rec.id;
    g.nodes_.emplace(id, std::move(rec));
  }
  return g;
}

bool Graph::add_node(NodeId id) {
  auto [it, fresh] = nodes_.try_emplace(id);
  if (fresh) it->second.id = id;
  return fresh;
}

bool Graph::add_edge(NodeId src, NodeId dst) {
  add_node(src);
  add_node(dst);
  if (!sorted_insert(nodes_.find(src)->second.out, dst)) return false;
  sorted_insert(nodes_.find(dst)->second.in, src);
  ++edge_count_;
  return true;
}

bool Graph::del_edge(NodeId src, NodeId dst) {
  auto s = nodes_.find(src);
  if (s == nodes_.end() || !sorted_erase(s->second.out, dst)) return false;
  sorted_erase(nodes_.find(dst)->second.in, src);
  --edge_count_;
  return true;
}

bool Graph::del_node(NodeId id) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) return false;
  const NodeRecord& rec = it->second;
  bool self_loop = false;
  for (NodeId v : rec.out) {
    if (v == id) {
      self_loop = true;
      continue;
    }
    sorted_erase(nodes_.find(v)->second.in, id);
  }
  for (NodeId u : rec.in) {
    if (u != id) sorted_erase(nodes_.find(u)->second.out, id);
  }
  edge_count_ -= rec.out.size() + rec.in.size() - (self_loop ? 1 : 0);
  nodes_.erase(it);
  return true;
}

bool Graph::has_edge(NodeId src, NodeId dst) const {
  const NodeRecord* rec = find(src);
  return rec != nullptr && sorted_contains(rec->out, dst);
}

const NodeRecord* Graph::find(NodeId id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

std::span<const NodeId> Graph::neighbors(NodeId id, Direction dir) const {
  const NodeRecord* rec = find(id);
  if (rec == nullptr) {
    throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(id) + " not in graph");
  }
  return dir == Direction::kOut ? rec->out : rec->in;
}

std::vector<NodeId> Graph::node_ids() const {
  std::vector<NodeId> ids;
  ids.reserve(nodes_.size());
  for (const auto& [id, rec] : nodes_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<const NodeRecord*> Graph::sorted_records() const {
  std::vector<const NodeRecord*> recs;
  recs.reserve(nodes_.size());
  for (const auto& [id, rec] : nodes_) recs.push_back(&rec);
  std::sort(recs.begin(), recs.end(),
            [](const NodeRecord* a, const NodeRecord* b) { return a->id < b->id; });
  return recs;
}

bool Graph::is_consistent() const {
  std::size_t out_total = 0;
  std::size_t in_total = 0;
  for (const auto& [id, rec] : nodes_) {
    if (rec.id != id) return false;
    auto strictly_ascending = [](const std::vector<NodeId>& v) {
      return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
    };
    if (!strictly_ascending(rec.out) || !strictly_ascending(rec.in)) return false;
    for (NodeId v : rec.out) {
      const NodeRecord* other = find(v);
      if (other == nullptr || !sorted_contains(other->in, id)) return false;
    }
    for (NodeId u : rec.in) {
      const NodeRecord* other = find(u);
      if (other == nullptr || !sorted_contains(other->out, id)) return false;
    }
    out_total += rec.out.size();
    in_total += rec.in.size();
  }
  return out_total == edge_count_ && in_total == edge_count_;
}

std::size_t Graph::memory_bytes() const {
  // Per entry: record, key, next pointer, cached hash; plus the bucket array.
  std::size_t bytes = nodes_.bucket_count() * sizeof(void*);
  bytes += nodes_.size() * (sizeof(NodeRecord) + sizeof(NodeId) + 2 * sizeof(void*));
  for (const auto& [id, rec] : nodes_) {
    bytes += (rec.in.capacity() + rec.out.capacity()) * sizeof(NodeId);
  }
  return bytes;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  for (const auto& [id, rec] : a.nodes_) {
    const NodeRecord* other = b.find(id);
    if (other == nullptr || !(*other == rec)) return false;
  }
  return true;
}

}  // namespace tablegraph
