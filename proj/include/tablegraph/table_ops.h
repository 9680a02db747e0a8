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

#ifndef TABLEGRAPH_TABLE_OPS_H_
#define TABLEGRAPH_TABLE_OPS_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tablegraph/node_map.h"
#include "tablegraph/table.h"

namespace tablegraph {

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

const char* compare_op_symbol(CompareOp op);

// column <op> constant. The constant's type must equal the column's type;
// string comparisons are byte-wise on decoded values.
struct Predicate {
  std::string column;
  CompareOp op;
  Value constant;
};

// Parses "Col=Value", "Col>=3", "Col!=x". The constant is parsed according
// to the column's type in `schema`.
Predicate parse_predicate(std::string_view text, const Schema& schema);

// Rows satisfying `pred`, in input order, with their original row ids.
Table select(const Table& table, const Predicate& pred);
// Same filter applied to `table` itself; returns it.
Table& select_in_place(Table& table, const Predicate& pred);

Table project(const Table& table, const std::vector<std::string>& columns);

// Equi-join. Output schema is left columns then right columns; a name present
// on both sides becomes "name-1" (left) and "name-2" (right). Output rows get
// fresh ids.
Table join(const Table& left, const Table& right, std::string_view left_col,
           std::string_view right_col);

enum class AggFn { kCount, kSum, kMin, kMax, kMean };

struct Aggregate {
  AggFn fn;
  std::string column;
};

const char* agg_fn_name(AggFn fn);

// One output row per distinct group-key tuple, in order of first occurrence.
// Output columns: the group columns, then one "<fn>_<column>" per aggregate.
// count yields int, mean yields float, sum keeps the column's numeric type,
// min/max keep the column's type.
Table group_aggregate(const Table& table,
                      const std::vector<std::string>& group_cols,
                      const std::vector<Aggregate>& aggs);

// Stable lexicographic sort on `cols`; ties are broken by row id. Row ids
// move with their rows.
Table order(const Table& table, const std::vector<std::string>& cols,
            bool ascending = true);

enum class SetOp { kUnion, kIntersection, kDifference };

// Multiset semantics on whole-row tuples. Schemas must be identical.
Table set_op(const Table& left, const Table& right, SetOp op);

enum class Metric { kL1, kL2 };

struct ColumnPair {
  std::string left;
  std::string right;
};

// All (left, right) row pairs whose distance over `cols` is strictly below
// `threshold`, emitted left-major then right-ascending. Output columns as in
// join.
Table sim_join(const Table& left, const Table& right,
               const std::vector<ColumnPair>& cols, Metric metric,
               double threshold);

// Within each group_col group, rows are ordered by (order_col, row id) and
// each row is paired with up to k following rows. Output is predecessor
// columns ("name-1") followed by successor columns ("name-2").
Table next_k(const Table& table, std::string_view group_col,
             std::string_view order_col, std::int64_t k);

struct EncodedStrings {
  Table table;       // `col` replaced by an int code column
  Table dictionary;  // (code:int, value:str), codes 0..d-1
};

// Codes are assigned in order of first occurrence.
EncodedStrings encode_strings(const Table& table, std::string_view col);

// Two-column (int key, float value) table sorted ascending by key.
Table table_from_pairs(std::vector<std::pair<std::int64_t, double>> pairs,
                       const std::string& key_name,
                       const std::string& value_name);

template <typename Map>
Table table_from_map(const Map& map, const std::string& key_name,
                     const std::string& value_name) {
  std::vector<std::pair<std::int64_t, double>> pairs;
  pairs.reserve(map.size());
  for (const auto& [k, v] : map) pairs.emplace_back(k, v);
  return table_from_pairs(std::move(pairs), key_name, value_name);
}

inline Table table_from_map(const NodeMap<double>& map,
                            const std::string& key_name,
                            const std::string& value_name) {
  std::vector<std::pair<std::int64_t, double>> pairs;
  pairs.reserve(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    pairs.emplace_back(map.ids()[i], map.values()[i]);
  }
  return table_from_pairs(std::move(pairs), key_name, value_name);
}

}  // namespace tablegraph

#endif  // TABLEGRAPH_TABLE_OPS_H_
