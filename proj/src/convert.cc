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

#include "tablegraph/convert.h"

#include <algorithm>
#include <atomic>
#include <utility>

#include "tablegraph/claim_vector.h"
#include "tablegraph/concurrent_slot_map.h"

namespace tablegraph {
namespace {

using Pair = std::pair<NodeId, NodeId>;

// (node, distinct neighbor count) for each run of equal first components.
std::vector<std::pair<NodeId, std::size_t>> run_lengths(const std::vector<Pair>& pairs) {
  std::vector<std::pair<NodeId, std::size_t>> runs;
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i + 1;
    while (j < pairs.size() && pairs[j].first == pairs[i].first) ++j;
    runs.emplace_back(pairs[i].first, j - i);
    i = j;
  }
  return runs;
}

std::vector<RowId> iota_ids(std::size_t n) {
  std::vector<RowId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<RowId>(i);
  return ids;
}

}  // namespace

Graph table_to_graph(const Table& table, const EdgeSpec& spec,
                     unsigned workers, BuildStats* stats) {
  const std::size_t sc = table.schema().index_of(spec.source);
  const std::size_t dc = table.schema().index_of(spec.destination);
  auto src = table.ints(sc);
  auto dst = table.ints(dc);
  const std::size_t rows = table.row_count();
  workers = std::max(1u, workers);

  // 1. Copy the columns.
  std::vector<Pair> out_pairs(rows);
  std::vector<Pair> in_pairs(rows);
  parallel::for_each_index(rows, workers, [&](std::size_t i) {
    out_pairs[i] = {src[i], dst[i]};
    in_pairs[i] = {dst[i], src[i]};
  });

  // 2. Sort the copies; equal pairs become adjacent and collapse.
  parallel::sort(out_pairs.begin(), out_pairs.end(), workers);
  parallel::sort(in_pairs.begin(), in_pairs.end(), workers);
  out_pairs.erase(std::unique(out_pairs.begin(), out_pairs.end()), out_pairs.end());
  in_pairs.erase(std::unique(in_pairs.begin(), in_pairs.end()), in_pairs.end());

  // 3. Degrees from the sorted runs.
  const auto out_runs = run_lengths(out_pairs);
  const auto in_runs = run_lengths(in_pairs);
  std::size_t node_bound = 0;
  {
    // Exact node count: merge the two sorted key lists.
    std::size_t i = 0, j = 0;
    while (i < out_runs.size() || j < in_runs.size()) {
      if (j == in_runs.size() || (i < out_runs.size() && out_runs[i].first < in_runs[j].first)) {
        ++i;
      } else if (i == out_runs.size() || in_runs[j].first < out_runs[i].first) {
        ++j;
      } else {
        ++i, ++j;
      }
      ++node_bound;
    }
  }

  // 4. Node slots and adjacency storage at their final sizes.
  ConcurrentSlotMap<> slots(ConcurrentSlotMap<>::capacity_for(node_bound));
  std::vector<ClaimVector<NodeId>> out_adj(slots.slot_count());
  std::vector<ClaimVector<NodeId>> in_adj(slots.slot_count());
  parallel::for_each_index(out_runs.size(), workers, [&](std::size_t r) {
    out_adj[slots.insert(out_runs[r].first)] = ClaimVector<NodeId>(out_runs[r].second);
  });
  parallel::for_each_index(in_runs.size(), workers, [&](std::size_t r) {
    in_adj[slots.insert(in_runs[r].first)] = ClaimVector<NodeId>(in_runs[r].second);
  });

  // 5. Fill. Each worker takes a contiguous slice of the edge lists and
  // claims cells; consecutive pairs usually share a node, so the slot lookup
  // is cached per run.
  auto fill = [&](const std::vector<Pair>& pairs,
                  std::vector<ClaimVector<NodeId>>& adj) {
    parallel::for_chunks(pairs.size(), workers, workers,
                         [&](std::size_t, parallel::Range range) {
                           NodeId cached_id = 0;
                           std::size_t cached_slot = 0;
                           bool have = false;
                           for (std::size_t i = range.begin; i < range.end; ++i) {
                             const auto& [node, neighbor] = pairs[i];
                             if (!have || node != cached_id) {
                               cached_slot = *slots.lookup(node);
                               cached_id = node;
                               have = true;
                             }
                             adj[cached_slot].claim_append(neighbor);
                           }
                         });
  };
  fill(out_pairs, out_adj);
  fill(in_pairs, in_adj);

  // 6. Sort each vector, then hand the storage to the graph.
  const std::size_t slot_count = slots.slot_count();
  std::atomic<bool> exact{true};
  parallel::for_each_index(slot_count, workers, [&](std::size_t s) {
    if (!out_adj[s].full() || !in_adj[s].full()) exact.store(false, std::memory_order_relaxed);
    auto o = out_adj[s].claimed();
    auto n = in_adj[s].claimed();
    std::sort(o.begin(), o.end());
    std::sort(n.begin(), n.end());
  });

  std::vector<std::size_t> occupied;
  occupied.reserve(node_bound);
  for (std::size_t s = 0; s < slot_count; ++s) {
    if (slots.key_at(s)) occupied.push_back(s);
  }
  std::vector<NodeRecord> records(occupied.size());
  parallel::for_each_index(occupied.size(), workers, [&](std::size_t i) {
    const std::size_t s = occupied[i];
    records[i].id = *slots.key_at(s);
    records[i].out = out_adj[s].release();
    records[i].in = in_adj[s].release();
  });

  if (stats != nullptr) {
    stats->rows = rows;
    stats->edges = out_pairs.size();
    stats->nodes = records.size();
    stats->exact_sizing = exact.load();
  }
  return Graph::from_records(std::move(records));
}

Table graph_to_edge_table(const Graph& g, unsigned workers) {
  workers = std::max(1u, workers);
  const auto recs = g.sorted_records();
  std::vector<std::size_t> offsets(recs.size() + 1, 0);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    offsets[i + 1] = offsets[i] + recs[i]->out.size();
  }
  const std::size_t edges = offsets.back();
  std::vector<std::int64_t> src(edges), dst(edges);
  parallel::for_chunks(recs.size(), workers, workers,
                       [&](std::size_t, parallel::Range range) {
                         for (std::size_t i = range.begin; i < range.end; ++i) {
                           std::size_t at = offsets[i];
                           for (NodeId v : recs[i]->out) {
                             src[at] = recs[i]->id;
                             dst[at] = v;
                             ++at;
                           }
                         }
                       });
  std::vector<ColumnData> cols;
  cols.push_back(std::move(src));
  cols.push_back(std::move(dst));
  return Table::from_columns(
      Schema{{"src", ColumnType::kInt}, {"dst", ColumnType::kInt}},
      std::move(cols), iota_ids(edges), nullptr, static_cast<RowId>(edges));
}

namespace {

Table node_table(const Graph& g, const NodeMap<double>* values,
                 const std::string& value_name, unsigned workers) {
  workers = std::max(1u, workers);
  const auto recs = g.sorted_records();
  const std::size_t n = recs.size();
  if (values != nullptr) {
    bool covers = values->size() == n;
    for (std::size_t i = 0; covers && i < n; ++i) {
      covers = values->ids()[i] == recs[i]->id;
    }
    if (!covers) {
      throw Error(ErrorCode::kCoverage,
                  "value map covers " + std::to_string(values->size()) +
                      " ids but does not match the graph's " + std::to_string(n) +
                      " nodes");
    }
  }
  std::vector<std::int64_t> ids(n), outdeg(n), indeg(n);
  parallel::for_each_index(n, workers, [&](std::size_t i) {
    ids[i] = recs[i]->id;
    outdeg[i] = static_cast<std::int64_t>(recs[i]->out.size());
    indeg[i] = static_cast<std::int64_t>(recs[i]->in.size());
  });
  std::vector<Column> schema{{"node", ColumnType::kInt},
                             {"out_degree", ColumnType::kInt},
                             {"in_degree", ColumnType::kInt}};
  std::vector<ColumnData> cols;
  cols.push_back(std::move(ids));
  cols.push_back(std::move(outdeg));
  cols.push_back(std::move(indeg));
  if (values != nullptr) {
    schema.push_back({value_name, ColumnType::kFloat});
    cols.push_back(std::vector<double>(values->values().begin(), values->values().end()));
  }
  return Table::from_columns(Schema(std::move(schema)), std::move(cols),
                             iota_ids(n), nullptr, static_cast<RowId>(n));
}

}  // namespace

Table graph_to_node_table(const Graph& g, unsigned workers) {
  return node_table(g, nullptr, {}, workers);
}

Table graph_to_node_table(const Graph& g, const NodeMap<double>& values,
                          const std::string& value_name, unsigned workers) {
  return node_table(g, &values, value_name, workers);
}

}  // namespace tablegraph
