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

#ifndef TABLEGRAPH_BENCH_H_
#define TABLEGRAPH_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "tablegraph/parallel.h"
#include "tablegraph/table.h"

namespace tablegraph {

enum class BenchOp {
  kPageRank,
  kTriangles,
  kSssp,
  kScc,
  kKCore,
  kSelect,
  kJoin,
  kToGraph,
  kToTable,
};

const char* bench_op_name(BenchOp op);
std::optional<BenchOp> parse_bench_op(std::string_view name);

struct BenchOptions {
  BenchOp op = BenchOp::kPageRank;
  int repetitions = 5;
  unsigned workers = default_workers();
  std::string dataset_name;
  // Seeds the sssp source draw.
  std::uint64_t seed = 1;
};

struct BenchReport {
  std::string operation;
  std::string dataset;
  unsigned workers = 0;
  int repetitions = 0;
  double mean_seconds = 0;
  double units_per_second = 0;  // units / mean_seconds
  std::uint64_t units = 0;      // rows or edges processed per timed run
  std::uint64_t peak_bytes = 0;
  // Hash of the result of the last run; equal across runs of a deterministic
  // op.
  std::string checksum;
  // Short human-readable result, e.g. the scores of a tiny PageRank.
  std::string summary;

  // op, dataset, workers, reps, mean_seconds, units_per_second, peak_bytes
  std::string to_tsv() const;
};

// Peak resident set size of this process so far.
std::uint64_t peak_resident_bytes();

/// Runs one untimed warm-up and then `repetitions` timed runs of the
/// operation on `edges`, whose first two columns are the integer source and
/// destination. Only the operation itself is timed: graphs and input copies
/// are prepared outside the clock. sssp times the mean over 10 sources drawn
/// uniformly from the nodes.
BenchReport run_bench(const Table& edges, const BenchOptions& options);

// Loads `dataset` as TSV with `schema` (default "src:int,dst:int"), then
// benchmarks it.
BenchReport run_bench(const std::filesystem::path& dataset, const BenchOptions& options,
                      std::string_view schema = "src:int,dst:int");

}  // namespace tablegraph

#endif  // TABLEGRAPH_BENCH_H_
