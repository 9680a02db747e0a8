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

#include "tablegraph/algorithms.h"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "tablegraph/error.h"

namespace tablegraph {
namespace {

using Index = std::uint32_t;

enum class Adjacency { kOut, kIn, kSymmetric };

// Compressed, index-based copy of one adjacency direction, built per
// algorithm call. Node i is the i-th smallest id.
struct DenseAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<Index> targets;

  std::span<const Index> operator[](std::size_t u) const {
    return {targets.data() + offsets[u], offsets[u + 1] - offsets[u]};
  }
  std::size_t degree(std::size_t u) const { return offsets[u + 1] - offsets[u]; }
};

class DenseIndex {
 public:
  explicit DenseIndex(const Graph& g) : records_(g.sorted_records()) {
    if (records_.size() >= std::numeric_limits<Index>::max()) {
      throw Error(ErrorCode::kInvalidArgument, "graph too large for dense indexing");
    }
    index_.reserve(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) {
      index_.emplace(records_[i]->id, static_cast<Index>(i));
    }
  }

  std::size_t size() const { return records_.size(); }
  const NodeRecord& record(std::size_t i) const { return *records_[i]; }
  NodeId id(std::size_t i) const { return records_[i]->id; }
  Index index_of(NodeId id) const { return index_.at(id); }
  std::vector<NodeId> ids() const {
    std::vector<NodeId> out(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) out[i] = records_[i]->id;
    return out;
  }

  // Neighbor ids of node i for `kind`, ascending and duplicate-free.
  template <typename Fn>
  void visit(std::size_t i, Adjacency kind, bool drop_self, Fn&& fn) const {
    const NodeRecord& rec = *records_[i];
    auto emit = [&](NodeId v) {
      if (!(drop_self && v == rec.id)) fn(v);
    };
    if (kind == Adjacency::kOut) {
      for (NodeId v : rec.out) emit(v);
    } else if (kind == Adjacency::kIn) {
      for (NodeId v : rec.in) emit(v);
    } else {
      auto a = rec.out.begin(), ae = rec.out.end();
      auto b = rec.in.begin(), be = rec.in.end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && *a < *b)) {
          emit(*a++);
        } else if (a == ae || *b < *a) {
          emit(*b++);
        } else {
          emit(*a++);
          ++b;
        }
      }
    }
  }

  DenseAdjacency build(Adjacency kind, bool drop_self, unsigned workers) const {
    const std::size_t n = size();
    DenseAdjacency adj;
    adj.offsets.assign(n + 1, 0);
    parallel::for_each_index(n, workers, [&](std::size_t i) {
      std::size_t d = 0;
      visit(i, kind, drop_self, [&](NodeId) { ++d; });
      adj.offsets[i + 1] = d;
    });
    for (std::size_t i = 0; i < n; ++i) adj.offsets[i + 1] += adj.offsets[i];
    adj.targets.resize(adj.offsets[n]);
    parallel::for_each_index(n, workers, [&](std::size_t i) {
      std::size_t at = adj.offsets[i];
      visit(i, kind, drop_self, [&](NodeId v) { adj.targets[at++] = index_of(v); });
    });
    return adj;
  }

 private:
  std::vector<const NodeRecord*> records_;
  std::unordered_map<NodeId, Index> index_;
};

}  // namespace

NodeMap<double> pagerank(const Graph& g, const PageRankOptions& options) {
  if (g.empty()) throw Error(ErrorCode::kEmptyGraph, "pagerank on an empty graph");
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "pagerank damping must lie in (0, 1), got " +
                    std::to_string(options.damping));
  }
  if (options.iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "pagerank needs at least one iteration");
  }
  const unsigned workers = std::max(1u, options.workers);
  const DenseIndex index(g);
  const std::size_t n = index.size();
  const DenseAdjacency in_adj = index.build(Adjacency::kIn, false, workers);
  std::vector<std::size_t> outdeg(n);
  for (std::size_t i = 0; i < n; ++i) outdeg[i] = index.record(i).out.size();

  const double d = options.damping;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> score(n, inv_n), next(n), contrib(n);
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> block_dangling(blocks);

  for (int it = 1; it <= options.iterations; ++it) {
    parallel::for_each_index(blocks, workers, [&](std::size_t b) {
      double sum = 0.0;
      const std::size_t end = std::min(n, (b + 1) * kBlock);
      for (std::size_t u = b * kBlock; u < end; ++u) {
        if (outdeg[u] == 0) {
          contrib[u] = 0.0;
          sum += score[u];
        } else {
          contrib[u] = score[u] / static_cast<double>(outdeg[u]);
        }
      }
      block_dangling[b] = sum;
    });
    double dangling = 0.0;
    for (double s : block_dangling) dangling += s;
    const double base = (1.0 - d) * inv_n + d * dangling * inv_n;
    parallel::for_each_index(n, workers, [&](std::size_t v) {
      double sum = 0.0;
      for (Index u : in_adj[v]) sum += contrib[u];
      next[v] = base + d * sum;
    });
    score.swap(next);
    if (options.on_iteration) options.on_iteration(it, score);
  }
  return NodeMap<double>(index.ids(), std::move(score));
}

std::uint64_t triangle_count(const Graph& g, unsigned workers) {
  workers = std::max(1u, workers);
  const DenseIndex index(g);
  const std::size_t n = index.size();
  const DenseAdjacency sym = index.build(Adjacency::kSymmetric, true, workers);

  // Orient every undirected edge toward the endpoint of higher (degree, id).
  auto higher = [&](std::size_t a, std::size_t b) {
    const std::size_t da = sym.degree(a), db = sym.degree(b);
    return da != db ? db > da : b > a;
  };
  DenseAdjacency fwd;
  fwd.offsets.assign(n + 1, 0);
  parallel::for_each_index(n, workers, [&](std::size_t u) {
    std::size_t c = 0;
    for (Index v : sym[u]) c += higher(u, v);
    fwd.offsets[u + 1] = c;
  });
  for (std::size_t i = 0; i < n; ++i) fwd.offsets[i + 1] += fwd.offsets[i];
  fwd.targets.resize(fwd.offsets[n]);
  parallel::for_each_index(n, workers, [&](std::size_t u) {
    std::size_t at = fwd.offsets[u];
    for (Index v : sym[u]) {
      if (higher(u, v)) fwd.targets[at++] = v;
    }
  });

  std::uint64_t total = 0;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 64) reduction(+ : total) if (workers > 1)
  for (std::int64_t ui = 0; ui < count; ++ui) {
    const auto nu = fwd[static_cast<std::size_t>(ui)];
    for (Index v : nu) {
      const auto nv = fwd[v];
      auto a = nu.begin();
      auto b = nv.begin();
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++total;
          ++a;
          ++b;
        }
      }
    }
  }
  return total;
}

NodeMap<std::uint64_t> sssp(const Graph& g, NodeId source) {
  if (!g.has_node(source)) {
    throw Error(ErrorCode::kUnknownNode,
                "sssp source " + std::to_string(source) + " not in graph");
  }
  const DenseIndex index(g);
  const DenseAdjacency out = index.build(Adjacency::kOut, false, 1);
  std::vector<std::uint64_t> dist(index.size(), kUnreachable);
  std::vector<Index> frontier{index.index_of(source)};
  dist[frontier[0]] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Index u = frontier[head];
    for (Index v : out[u]) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return NodeMap<std::uint64_t>(index.ids(), std::move(dist));
}

NodeMap<std::int64_t> scc(const Graph& g) {
  const DenseIndex index(g);
  const std::size_t n = index.size();
  const DenseAdjacency out = index.build(Adjacency::kOut, false, 1);

  // Iterative Tarjan.
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, kUnvisited), low(n);
  std::vector<bool> on_stack(n, false);
  std::vector<std::int64_t> label(n, -1);
  std::vector<Index> stack;
  std::vector<std::pair<Index, std::size_t>> calls;  // (node, next edge)
  std::size_t counter = 0;
  std::int64_t components = 0;
  std::vector<std::size_t> root_order;  // discovery index of each component's root

  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    calls.emplace_back(static_cast<Index>(root), 0);
    order[root] = low[root] = counter++;
    stack.push_back(static_cast<Index>(root));
    on_stack[root] = true;
    while (!calls.empty()) {
      auto& [u, edge] = calls.back();
      const auto succ = out[u];
      if (edge < succ.size()) {
        const Index v = succ[edge++];
        if (order[v] == kUnvisited) {
          order[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
          calls.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], order[v]);
        }
        continue;
      }
      const Index done = u;
      calls.pop_back();
      if (!calls.empty()) {
        const Index parent = calls.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == order[done]) {
        root_order.push_back(order[done]);
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          label[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }
  // Tarjan emits components in completion order; renumber them by the
  // discovery index of their roots.
  std::vector<std::int64_t> by_discovery(root_order.size());
  std::iota(by_discovery.begin(), by_discovery.end(), std::int64_t{0});
  std::sort(by_discovery.begin(), by_discovery.end(),
            [&](std::int64_t a, std::int64_t b) { return root_order[a] < root_order[b]; });
  std::vector<std::int64_t> relabel(root_order.size());
  for (std::size_t i = 0; i < by_discovery.size(); ++i) {
    relabel[by_discovery[i]] = static_cast<std::int64_t>(i);
  }
  for (auto& l : label) l = relabel[l];
  return NodeMap<std::int64_t>(index.ids(), std::move(label));
}

Graph k_core(const Graph& g, std::int64_t k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k_core needs k >= 1, got " + std::to_string(k));
  }
  const DenseIndex index(g);
  const std::size_t n = index.size();
  const DenseAdjacency sym = index.build(Adjacency::kSymmetric, true, 1);
  const auto need = static_cast<std::size_t>(k);

  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::vector<Index> queue;
  for (std::size_t u = 0; u < n; ++u) {
    degree[u] = sym.degree(u);
    if (degree[u] < need) {
      removed[u] = true;
      queue.push_back(static_cast<Index>(u));
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Index v : sym[queue[head]]) {
      if (removed[v]) continue;
      if (--degree[v] < need) {
        removed[v] = true;
        queue.push_back(v);
      }
    }
  }

  std::vector<NodeRecord> records;
  records.reserve(n - queue.size());
  auto alive = [&](NodeId id) { return !removed[index.index_of(id)]; };
  for (std::size_t u = 0; u < n; ++u) {
    if (removed[u]) continue;
    const NodeRecord& rec = index.record(u);
    NodeRecord kept{rec.id, {}, {}};
    std::copy_if(rec.in.begin(), rec.in.end(), std::back_inserter(kept.in), alive);
    std::copy_if(rec.out.begin(), rec.out.end(), std::back_inserter(kept.out), alive);
    records.push_back(std::move(kept));
  }
  return Graph::from_records(std::move(records));
}

NodeMap<std::int64_t> connected_components(const Graph& g) {
  const DenseIndex index(g);
  const std::size_t n = index.size();
  const DenseAdjacency sym = index.build(Adjacency::kSymmetric, true, 1);
  std::vector<std::int64_t> label(n, -1);
  std::vector<Index> queue;
  std::int64_t next = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (label[root] >= 0) continue;
    label[root] = next;
    queue.assign(1, static_cast<Index>(root));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Index v : sym[queue[head]]) {
        if (label[v] < 0) {
          label[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return NodeMap<std::int64_t>(index.ids(), std::move(label));
}

}  // namespace tablegraph
