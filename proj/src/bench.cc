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

#include "tablegraph/bench.h"

#include <sys/resource.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "tablegraph/algorithms.h"
#include "tablegraph/convert.h"
#include "tablegraph/table_ops.h"
#include "tablegraph/tsv.h"

namespace tablegraph {
namespace {

constexpr std::int64_t kSelectTarget = 10000;
constexpr int kSsspSources = 10;
constexpr std::int64_t kCoreK = 3;

class Fnv {
 public:
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= (v >> (8 * i)) & 0xff;
      h_ *= 0x100000001b3ULL;
    }
  }
  void add(double v) { add(std::bit_cast<std::uint64_t>(v)); }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

void hash_table(const Table& t, Fnv& fnv) {
  fnv.add(static_cast<std::uint64_t>(t.row_count()));
  for (std::size_t c = 0; c < t.column_count(); ++c) {
    std::visit([&](const auto& v) {
      for (auto x : v) fnv.add(static_cast<std::uint64_t>(x));
    }, t.column(c));
  }
}

void hash_graph(const Graph& g, Fnv& fnv) {
  fnv.add(static_cast<std::uint64_t>(g.node_count()));
  fnv.add(static_cast<std::uint64_t>(g.edge_count()));
  for (const NodeRecord* rec : g.sorted_records()) {
    fnv.add(static_cast<std::uint64_t>(rec->id));
    for (NodeId v : rec->out) fnv.add(static_cast<std::uint64_t>(v));
  }
}

// Cutoff c such that `column < c` keeps about kSelectTarget rows.
std::int64_t select_cutoff(std::span<const std::int64_t> col) {
  if (col.empty()) return 0;
  std::vector<std::int64_t> sorted(col.begin(), col.end());
  const auto k = static_cast<std::size_t>(std::min<std::int64_t>(kSelectTarget, col.size()));
  if (k == sorted.size()) return *std::max_element(sorted.begin(), sorted.end()) + 1;
  std::nth_element(sorted.begin(), sorted.begin() + k, sorted.end());
  return sorted[k];
}

// Single-column table of the smallest distinct source values whose rows add
// up to roughly kSelectTarget join matches.
Table join_keys(std::span<const std::int64_t> col, const std::string& name) {
  std::vector<std::int64_t> sorted(col.begin(), col.end());
  std::sort(sorted.begin(), sorted.end());
  Table keys(Schema{{name, ColumnType::kInt}});
  std::int64_t matched = 0;
  for (std::size_t i = 0; i < sorted.size() && matched < kSelectTarget;) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    keys.append_row({sorted[i]});
    matched += static_cast<std::int64_t>(j - i);
    i = j;
  }
  return keys;
}

}  // namespace

const char* bench_op_name(BenchOp op) {
  switch (op) {
    case BenchOp::kPageRank: return "pagerank";
    case BenchOp::kTriangles: return "triangles";
    case BenchOp::kSssp: return "sssp";
    case BenchOp::kScc: return "scc";
    case BenchOp::kKCore: return "kcore";
    case BenchOp::kSelect: return "select";
    case BenchOp::kJoin: return "join";
    case BenchOp::kToGraph: return "to-graph";
    case BenchOp::kToTable: return "to-table";
  }
  return "?";
}

std::optional<BenchOp> parse_bench_op(std::string_view name) {
  for (BenchOp op : {BenchOp::kPageRank, BenchOp::kTriangles, BenchOp::kSssp,
                     BenchOp::kScc, BenchOp::kKCore, BenchOp::kSelect,
                     BenchOp::kJoin, BenchOp::kToGraph, BenchOp::kToTable}) {
    if (name == bench_op_name(op)) return op;
  }
  return std::nullopt;
}

std::string BenchReport::to_tsv() const {
  std::ostringstream out;
  out.precision(9);
  out << operation << '\t' << dataset << '\t' << workers << '\t' << repetitions
      << '\t' << mean_seconds << '\t' << units_per_second << '\t' << peak_bytes;
  return out.str();
}

std::uint64_t peak_resident_bytes() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;
}

BenchReport run_bench(const Table& edges, const BenchOptions& options) {
  if (options.repetitions < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bench needs at least one repetition");
  }
  if (edges.column_count() < 2) {
    throw Error(ErrorCode::kSchemaMismatch, "bench dataset needs source and destination columns");
  }
  const unsigned workers = std::max(1u, options.workers);
  struct WorkerScope {
    unsigned saved;
    explicit WorkerScope(unsigned w) : saved(default_workers()) { set_default_workers(w); }
    ~WorkerScope() { set_default_workers(saved); }
  } scope(workers);

  const EdgeSpec spec{edges.schema()[0].name, edges.schema()[1].name};
  const bool needs_graph = options.op != BenchOp::kSelect &&
                           options.op != BenchOp::kJoin &&
                           options.op != BenchOp::kToGraph;
  Graph graph;
  if (needs_graph) graph = table_to_graph(edges, spec, workers);

  BenchReport report;
  report.operation = bench_op_name(options.op);
  report.dataset = options.dataset_name;
  report.workers = workers;
  report.repetitions = options.repetitions;

  std::function<void()> prepare = [] {};
  std::function<void()> body;
  Fnv fnv;
  std::ostringstream summary;
  summary.precision(12);

  Table scratch;
  Table join_right;
  std::vector<NodeId> sources;
  Predicate cutoff;

  switch (options.op) {
    case BenchOp::kPageRank:
      report.units = graph.edge_count();
      body = [&] {
        PageRankOptions pr;
        pr.workers = workers;
        auto ranks = pagerank(graph, pr);
        fnv = Fnv();
        for (double s : ranks.values()) fnv.add(s);
        summary.str("");
        if (ranks.size() <= 16) {
          summary << "scores=[";
          for (std::size_t i = 0; i < ranks.size(); ++i) {
            summary << (i ? "," : "") << ranks.ids()[i] << ':' << ranks.values()[i];
          }
          summary << ']';
        } else {
          summary << "nodes=" << ranks.size();
        }
      };
      break;
    case BenchOp::kTriangles:
      report.units = graph.edge_count();
      body = [&] {
        const auto t = triangle_count(graph, workers);
        fnv = Fnv();
        fnv.add(t);
        summary.str("");
        summary << "triangles=" << t;
      };
      break;
    case BenchOp::kSssp: {
      report.units = graph.edge_count();
      const auto ids = graph.node_ids();
      std::mt19937_64 rng(options.seed);
      for (int i = 0; i < kSsspSources && !ids.empty(); ++i) {
        sources.push_back(ids[rng() % ids.size()]);
      }
      body = [&] {
        fnv = Fnv();
        std::uint64_t reached = 0;
        for (NodeId s : sources) {
          auto dist = sssp(graph, s);
          for (auto d : dist.values()) {
            fnv.add(d);
            reached += d != kUnreachable;
          }
        }
        summary.str("");
        summary << "sources=" << sources.size() << " reached=" << reached;
      };
      break;
    }
    case BenchOp::kScc:
      report.units = graph.edge_count();
      body = [&] {
        auto labels = scc(graph);
        fnv = Fnv();
        std::int64_t count = 0;
        for (auto l : labels.values()) {
          fnv.add(static_cast<std::uint64_t>(l));
          count = std::max(count, l + 1);
        }
        summary.str("");
        summary << "components=" << count;
      };
      break;
    case BenchOp::kKCore:
      report.units = graph.edge_count();
      body = [&] {
        auto core = k_core(graph, kCoreK);
        fnv = Fnv();
        hash_graph(core, fnv);
        summary.str("");
        summary << "core_nodes=" << core.node_count() << " core_edges=" << core.edge_count();
      };
      break;
    case BenchOp::kSelect:
      report.units = edges.row_count();
      cutoff = Predicate{spec.source, CompareOp::kLt, select_cutoff(edges.ints(0))};
      prepare = [&] { scratch = edges; };
      body = [&] {
        select_in_place(scratch, cutoff);
        fnv = Fnv();
        hash_table(scratch, fnv);
        summary.str("");
        summary << "rows=" << scratch.row_count();
      };
      break;
    case BenchOp::kJoin:
      join_right = join_keys(edges.ints(0), "key");
      report.units = edges.row_count() + join_right.row_count();
      body = [&] {
        auto out = join(edges, join_right, spec.source, "key");
        fnv = Fnv();
        fnv.add(static_cast<std::uint64_t>(out.row_count()));
        summary.str("");
        summary << "rows=" << out.row_count();
      };
      break;
    case BenchOp::kToGraph:
      report.units = edges.row_count();
      body = [&] {
        auto g = table_to_graph(edges, spec, workers);
        fnv = Fnv();
        hash_graph(g, fnv);
        summary.str("");
        summary << "nodes=" << g.node_count() << " edges=" << g.edge_count();
      };
      break;
    case BenchOp::kToTable:
      report.units = graph.edge_count();
      body = [&] {
        auto t = graph_to_edge_table(graph, workers);
        fnv = Fnv();
        hash_table(t, fnv);
        summary.str("");
        summary << "rows=" << t.row_count();
      };
      break;
  }

  using Clock = std::chrono::steady_clock;
  prepare();
  body();  // warm-up
  double total = 0.0;
  for (int rep = 0; rep < options.repetitions; ++rep) {
    prepare();
    const auto start = Clock::now();
    body();
    total += std::chrono::duration<double>(Clock::now() - start).count();
  }

  double per_run = total / options.repetitions;
  if (options.op == BenchOp::kSssp && !sources.empty()) {
    per_run /= static_cast<double>(sources.size());
  }
  report.mean_seconds = std::max(per_run, 1e-9);
  report.units_per_second = static_cast<double>(report.units) / report.mean_seconds;
  report.peak_bytes = peak_resident_bytes();
  report.checksum = fnv.hex();
  report.summary = summary.str();
  return report;
}

BenchReport run_bench(const std::filesystem::path& dataset, const BenchOptions& options,
                      std::string_view schema) {
  Table edges = load_tsv(dataset, Schema::parse(schema));
  BenchOptions named = options;
  if (named.dataset_name.empty()) named.dataset_name = dataset.filename().string();
  return run_bench(edges, named);
}

}  // namespace tablegraph
