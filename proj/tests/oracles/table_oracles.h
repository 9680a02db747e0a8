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

// Brute-force reference implementations of the relational operators. These
// work on materialized rows and share no code with the engine.

#ifndef TABLEGRAPH_TESTS_ORACLES_TABLE_ORACLES_H_
#define TABLEGRAPH_TESTS_ORACLES_TABLE_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "tablegraph/table.h"
#include "tablegraph/table_ops.h"

namespace tablegraph::oracle {

using Row = std::vector<Value>;
using Rows = std::vector<Row>;

inline Rows rows_of(const Table& t) {
  Rows out;
  out.reserve(t.row_count());
  for (std::size_t r = 0; r < t.row_count(); ++r) out.push_back(t.row(r));
  return out;
}

inline Rows sorted(Rows rows) {
  std::sort(rows.begin(), rows.end());
  return rows;
}

inline Row concat(const Row& a, const Row& b) {
  Row out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline double as_number(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::get<double>(v);
}

inline bool holds(const Value& cell, CompareOp op, const Value& constant) {
  switch (op) {
    case CompareOp::kEq: return cell == constant;
    case CompareOp::kNe: return cell != constant;
    case CompareOp::kLt: return cell < constant;
    case CompareOp::kLe: return cell <= constant;
    case CompareOp::kGt: return cell > constant;
    case CompareOp::kGe: return cell >= constant;
  }
  return false;
}

inline Rows select(const Table& t, const Predicate& p) {
  const std::size_t c = t.schema().index_of(p.column);
  Rows out;
  for (const Row& row : rows_of(t)) {
    if (holds(row[c], p.op, p.constant)) out.push_back(row);
  }
  return out;
}

inline Rows nested_loop_join(const Table& l, const Table& r, const std::string& lcol,
                             const std::string& rcol) {
  const std::size_t lc = l.schema().index_of(lcol);
  const std::size_t rc = r.schema().index_of(rcol);
  const Rows lrows = rows_of(l), rrows = rows_of(r);
  Rows out;
  for (const Row& a : lrows) {
    for (const Row& b : rrows) {
      if (a[lc] == b[rc]) out.push_back(concat(a, b));
    }
  }
  return out;
}

// Pass one finds distinct keys by linear search, pass two rescans the rows
// for each key.
inline Rows two_pass_group(const Table& t, const std::vector<std::string>& group_cols,
                           const std::vector<Aggregate>& aggs) {
  std::vector<std::size_t> gc;
  for (const auto& n : group_cols) gc.push_back(t.schema().index_of(n));
  const Rows rows = rows_of(t);
  auto key_of = [&](const Row& row) {
    Row k;
    for (std::size_t c : gc) k.push_back(row[c]);
    return k;
  };
  std::vector<Row> row_keys, keys;
  for (const Row& row : rows) {
    row_keys.push_back(key_of(row));
    if (std::find(keys.begin(), keys.end(), row_keys.back()) == keys.end()) {
      keys.push_back(row_keys.back());
    }
  }
  Rows out;
  for (const Row& k : keys) {
    Row result = k;
    for (const Aggregate& a : aggs) {
      const std::size_t c = t.schema().index_of(a.column);
      const bool is_int = t.schema()[c].type == ColumnType::kInt;
      std::int64_t count = 0, isum = 0;
      double fsum = 0.0;
      Value lo, hi;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (row_keys[r] != k) continue;
        const Value& v = rows[r][c];
        if (count == 0 || v < lo) lo = v;
        if (count == 0 || hi < v) hi = v;
        ++count;
        if (t.schema()[c].type != ColumnType::kString) {
          fsum += as_number(v);
          if (is_int) isum += std::get<std::int64_t>(v);
        }
      }
      switch (a.fn) {
        case AggFn::kCount: result.emplace_back(count); break;
        case AggFn::kSum:
          result.push_back(is_int ? Value(isum) : Value(fsum));
          break;
        case AggFn::kMean: result.emplace_back(fsum / static_cast<double>(count)); break;
        case AggFn::kMin: result.push_back(lo); break;
        case AggFn::kMax: result.push_back(hi); break;
      }
    }
    out.push_back(std::move(result));
  }
  return out;
}

inline Rows multiset_set_op(const Table& l, const Table& r, SetOp op) {
  const Rows lrows = rows_of(l), rrows = rows_of(r);
  if (op == SetOp::kUnion) {
    Rows out = lrows;
    out.insert(out.end(), rrows.begin(), rrows.end());
    return out;
  }
  std::map<Row, std::size_t> remaining;
  for (const Row& row : rrows) ++remaining[row];
  Rows out;
  for (const Row& row : lrows) {
    auto it = remaining.find(row);
    const bool matched = it != remaining.end() && it->second > 0;
    if (matched) --it->second;
    if (matched == (op == SetOp::kIntersection)) out.push_back(row);
  }
  return out;
}

inline Rows all_pairs_sim_join(const Table& l, const Table& r,
                               const std::vector<ColumnPair>& cols, Metric metric,
                               double threshold) {
  const Rows lrows = rows_of(l), rrows = rows_of(r);
  Rows out;
  for (const Row& a : lrows) {
    for (const Row& b : rrows) {
      double acc = 0.0;
      for (const ColumnPair& p : cols) {
        const double d = as_number(a[l.schema().index_of(p.left)]) -
                         as_number(b[r.schema().index_of(p.right)]);
        acc += metric == Metric::kL1 ? std::abs(d) : d * d;
      }
      const double dist = metric == Metric::kL1 ? acc : std::sqrt(acc);
      if (dist < threshold) out.push_back(concat(a, b));
    }
  }
  return out;
}

inline Rows sort_window_next_k(const Table& t, const std::string& group_col,
                               const std::string& order_col, std::int64_t k) {
  const std::size_t gc = t.schema().index_of(group_col);
  const std::size_t oc = t.schema().index_of(order_col);
  const Rows rows = rows_of(t);
  std::map<Value, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < rows.size(); ++i) groups[rows[i][gc]].push_back(i);
  Rows out;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      const double x = as_number(rows[a][oc]), y = as_number(rows[b][oc]);
      if (x != y) return x < y;
      return t.row_ids()[a] < t.row_ids()[b];
    });
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size() && j <= i + static_cast<std::size_t>(k);
           ++j) {
        out.push_back(concat(rows[members[i]], rows[members[j]]));
      }
    }
  }
  return out;
}

// Row indices in sorted order; ties fall back to ascending row id.
inline std::vector<std::size_t> comparison_sort_order(const Table& t,
                                                      const std::vector<std::string>& cols,
                                                      bool ascending) {
  std::vector<std::size_t> cidx;
  for (const auto& c : cols) cidx.push_back(t.schema().index_of(c));
  const Rows rows = rows_of(t);
  std::vector<std::size_t> idx(rows.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t c : cidx) {
      if (rows[a][c] == rows[b][c]) continue;
      return ascending ? rows[a][c] < rows[b][c] : rows[b][c] < rows[a][c];
    }
    return t.row_ids()[a] < t.row_ids()[b];
  });
  return idx;
}

}  // namespace tablegraph::oracle

#endif  // TABLEGRAPH_TESTS_ORACLES_TABLE_ORACLES_H_
