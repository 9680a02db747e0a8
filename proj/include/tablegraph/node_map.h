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

#ifndef TABLEGRAPH_NODE_MAP_H_
#define TABLEGRAPH_NODE_MAP_H_

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tablegraph/error.h"

namespace tablegraph {

using NodeId = std::int64_t;

// Per-node result of a graph algorithm: parallel arrays of node ids (strictly
// ascending) and values.
template <typename T>
class NodeMap {
 public:
  NodeMap() = default;
  NodeMap(std::vector<NodeId> ids, std::vector<T> values)
      : ids_(std::move(ids)), values_(std::move(values)) {
    if (ids_.size() != values_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "node map ids and values differ in length");
    }
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::span<const NodeId> ids() const { return ids_; }
  std::span<const T> values() const { return values_; }
  std::span<T> mutable_values() { return values_; }

  const T* find(NodeId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return nullptr;
    return &values_[static_cast<std::size_t>(it - ids_.begin())];
  }
  bool contains(NodeId id) const { return find(id) != nullptr; }
  const T& at(NodeId id) const {
    if (const T* v = find(id)) return *v;
    throw Error(ErrorCode::kUnknownNode,
                "node " + std::to_string(id) + " not in result");
  }

  friend bool operator==(const NodeMap&, const NodeMap&) = default;

 private:
  std::vector<NodeId> ids_;
  std::vector<T> values_;
};

}  // namespace tablegraph

#endif  // TABLEGRAPH_NODE_MAP_H_
