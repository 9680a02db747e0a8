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

#include "tablegraph/table_ops.h"

#include <bit>
#include <charconv>
#include <functional>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "tablegraph/parallel.h"

namespace tablegraph {
namespace {

constexpr std::size_t kMinRowsPerChunk = 1 << 14;

std::size_t chunk_count(std::size_t rows, unsigned workers) {
  return std::max<std::size_t>(
      1, std::min<std::size_t>(workers * 4, rows / kMinRowsPerChunk));
}

// Translates string codes from one pool into another, interning on demand.
class CodeRemap {
 public:
  CodeRemap(const StringPool& from, StringPool& to)
      : from_(from), to_(to), identity_(&from == &to) {}

  std::uint32_t operator()(std::uint32_t code) {
    if (identity_) return code;
    if (code >= cache_.size()) cache_.resize(from_.size(), kUnset);
    std::int64_t& slot = cache_[code];
    if (slot == kUnset) slot = to_.intern(from_.at(code));
    return static_cast<std::uint32_t>(slot);
  }

 private:
  static constexpr std::int64_t kUnset = -1;
  const StringPool& from_;
  StringPool& to_;
  bool identity_;
  std::vector<std::int64_t> cache_;
};

ColumnData gather_column(const Table& src, std::size_t col,
                         std::span<const std::size_t> rows, CodeRemap& remap) {
  const ColumnData& data = src.column(col);
  return std::visit(
      [&](const auto& v) -> ColumnData {
        using Vec = std::decay_t<decltype(v)>;
        Vec out(rows.size());
        if constexpr (std::is_same_v<Vec, std::vector<std::uint32_t>>) {
          for (std::size_t i = 0; i < rows.size(); ++i) out[i] = remap(v[rows[i]]);
        } else {
          for (std::size_t i = 0; i < rows.size(); ++i) out[i] = v[rows[i]];
        }
        return out;
      },
      data);
}

// Appends `extra` (gathered from another table) onto `base`.
void append_column(ColumnData& base, ColumnData&& extra) {
  std::visit(
      [&](auto& b) {
        auto& e = std::get<std::decay_t<decltype(b)>>(extra);
        b.insert(b.end(), e.begin(), e.end());
      },
      base);
}

std::vector<RowId> fresh_ids(std::size_t n) {
  std::vector<RowId> ids(n);
  std::iota(ids.begin(), ids.end(), RowId{0});
  return ids;
}

std::shared_ptr<StringPool> output_pool(const Table& a, const Table& b) {
  if (a.pool() == b.pool()) return a.pool();
  return std::make_shared<StringPool>();
}

Schema concat_schema(const Schema& left, const Schema& right) {
  std::vector<Column> cols;
  cols.reserve(left.size() + right.size());
  for (const Column& c : left) {
    cols.push_back({right.find(c.name) ? c.name + "-1" : c.name, c.type});
  }
  for (const Column& c : right) {
    cols.push_back({left.find(c.name) ? c.name + "-2" : c.name, c.type});
  }
  return Schema(std::move(cols));
}

// Side-by-side concatenation of left[lrows[i]] and right[rrows[i]].
Table assemble_pairs(const Table& left, const Table& right,
                     std::span<const std::size_t> lrows,
                     std::span<const std::size_t> rrows) {
  auto pool = output_pool(left, right);
  CodeRemap lmap(*left.pool(), *pool);
  CodeRemap rmap(*right.pool(), *pool);
  std::vector<ColumnData> cols;
  cols.reserve(left.column_count() + right.column_count());
  for (std::size_t c = 0; c < left.column_count(); ++c) {
    cols.push_back(gather_column(left, c, lrows, lmap));
  }
  for (std::size_t c = 0; c < right.column_count(); ++c) {
    cols.push_back(gather_column(right, c, rrows, rmap));
  }
  const auto n = static_cast<RowId>(lrows.size());
  return Table::from_columns(concat_schema(left.schema(), right.schema()),
                             std::move(cols), fresh_ids(lrows.size()),
                             std::move(pool), n);
}

// Rows of `table` in the given order, keeping ids and pool.
Table gather_rows(const Table& table, std::span<const std::size_t> rows) {
  CodeRemap same(*table.pool(), *table.pool());
  std::vector<ColumnData> cols;
  cols.reserve(table.column_count());
  for (std::size_t c = 0; c < table.column_count(); ++c) {
    cols.push_back(gather_column(table, c, rows, same));
  }
  std::vector<RowId> ids(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) ids[i] = table.row_ids()[rows[i]];
  return Table::from_columns(table.schema(), std::move(cols), std::move(ids),
                             table.pool(), table.next_row_id());
}

// Canonical 64-bit image of a numeric cell: equal values map to equal keys.
std::uint64_t float_key(double x) {
  if (x == 0.0) return 0;
  if (std::isnan(x)) return 0x7ff8000000000000ULL;
  return std::bit_cast<std::uint64_t>(x);
}

// Cell keys for one column. String cells are expressed as codes in
// `code_space`; a string missing from that pool yields nullopt.
std::vector<std::optional<std::uint64_t>> column_keys(
    const Table& table, std::size_t col, const StringPool& code_space) {
  const std::size_t n = table.row_count();
  std::vector<std::optional<std::uint64_t>> keys(n);
  switch (table.schema()[col].type) {
    case ColumnType::kInt: {
      auto v = table.ints(col);
      for (std::size_t r = 0; r < n; ++r) keys[r] = static_cast<std::uint64_t>(v[r]);
      break;
    }
    case ColumnType::kFloat: {
      auto v = table.floats(col);
      for (std::size_t r = 0; r < n; ++r) keys[r] = float_key(v[r]);
      break;
    }
    case ColumnType::kString: {
      auto v = table.codes(col);
      const bool same = table.pool().get() == &code_space;
      std::unordered_map<std::uint32_t, std::optional<std::uint32_t>> cache;
      for (std::size_t r = 0; r < n; ++r) {
        if (same) {
          keys[r] = v[r];
          continue;
        }
        auto [it, fresh] = cache.try_emplace(v[r]);
        if (fresh) it->second = code_space.find(table.pool()->at(v[r]));
        if (it->second) keys[r] = *it->second;
      }
      break;
    }
  }
  return keys;
}

struct TupleHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t k : key) {
      h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

// Row tuple keys over `cols`; nullopt if any string is absent from the pool.
std::vector<std::optional<std::vector<std::uint64_t>>> tuple_keys(
    const Table& table, std::span<const std::size_t> cols,
    const StringPool& code_space) {
  std::vector<std::vector<std::optional<std::uint64_t>>> per_col;
  per_col.reserve(cols.size());
  for (std::size_t c : cols) per_col.push_back(column_keys(table, c, code_space));
  std::vector<std::optional<std::vector<std::uint64_t>>> keys(table.row_count());
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    std::vector<std::uint64_t> key;
    key.reserve(cols.size());
    bool ok = true;
    for (const auto& k : per_col) {
      if (!k[r]) {
        ok = false;
        break;
      }
      key.push_back(*k[r]);
    }
    if (ok) keys[r] = std::move(key);
  }
  return keys;
}

// Three-way comparison of two cells of the same column (possibly from
// different tables of the same type).
int compare_cells(const Table& a, std::size_t ca, std::size_t ra,
                  const Table& b, std::size_t cb, std::size_t rb) {
  switch (a.schema()[ca].type) {
    case ColumnType::kInt: {
      auto x = a.ints(ca)[ra];
      auto y = b.ints(cb)[rb];
      return x < y ? -1 : (y < x ? 1 : 0);
    }
    case ColumnType::kFloat: {
      auto x = a.floats(ca)[ra];
      auto y = b.floats(cb)[rb];
      return x < y ? -1 : (y < x ? 1 : 0);
    }
    case ColumnType::kString: {
      int c = a.string_at(ca, ra).compare(b.string_at(cb, rb));
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  }
  return 0;
}

template <typename T>
bool apply_op(const T& a, CompareOp op, const T& b) {
  switch (op) {
    case CompareOp::kEq: return a == b;
    case CompareOp::kNe: return a != b;
    case CompareOp::kLt: return a < b;
    case CompareOp::kLe: return a <= b;
    case CompareOp::kGt: return a > b;
    case CompareOp::kGe: return a >= b;
  }
  return false;
}

std::vector<std::size_t> matching_rows(const Table& table,
                                       const Predicate& pred) {
  const std::size_t col = table.schema().index_of(pred.column);
  const ColumnType type = table.schema()[col].type;
  if (value_type(pred.constant) != type) {
    throw Error(ErrorCode::kTypeMismatch,
                "predicate on column '" + pred.column + "' (" +
                    column_type_name(type) + ") compares against a " +
                    column_type_name(value_type(pred.constant)) + " constant");
  }
  const std::size_t n = table.row_count();
  std::function<bool(std::size_t)> test;
  std::optional<std::uint32_t> code;
  if (type == ColumnType::kString) {
    code = table.pool()->find(std::get<std::string>(pred.constant));
  }
  switch (type) {
    case ColumnType::kInt:
      test = [v = table.ints(col), c = std::get<std::int64_t>(pred.constant),
              op = pred.op](std::size_t r) { return apply_op(v[r], op, c); };
      break;
    case ColumnType::kFloat:
      test = [v = table.floats(col), c = std::get<double>(pred.constant),
              op = pred.op](std::size_t r) { return apply_op(v[r], op, c); };
      break;
    case ColumnType::kString:
      if (pred.op == CompareOp::kEq || pred.op == CompareOp::kNe) {
        const bool want_equal = pred.op == CompareOp::kEq;
        test = [v = table.codes(col), code, want_equal](std::size_t r) {
          return (code && v[r] == *code) == want_equal;
        };
      } else {
        test = [&table, col, c = std::string_view(std::get<std::string>(pred.constant)),
                op = pred.op](std::size_t r) {
          return apply_op(table.string_at(col, r), op, c);
        };
      }
      break;
  }

  const unsigned workers = default_workers();
  const std::size_t parts = chunk_count(n, workers);
  std::vector<std::vector<std::size_t>> kept(parts);
  parallel::for_chunks(n, parts, workers,
                       [&](std::size_t p, parallel::Range range) {
                         for (std::size_t r = range.begin; r < range.end; ++r) {
                           if (test(r)) kept[p].push_back(r);
                         }
                       });
  std::vector<std::size_t> rows;
  for (auto& k : kept) rows.insert(rows.end(), k.begin(), k.end());
  return rows;
}

}  // namespace

const char* compare_op_symbol(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNe: return "!=";
    case CompareOp::kLt: return "<";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGt: return ">";
    case CompareOp::kGe: return ">=";
  }
  return "?";
}

const char* agg_fn_name(AggFn fn) {
  switch (fn) {
    case AggFn::kCount: return "count";
    case AggFn::kSum: return "sum";
    case AggFn::kMin: return "min";
    case AggFn::kMax: return "max";
    case AggFn::kMean: return "mean";
  }
  return "?";
}

Predicate parse_predicate(std::string_view text, const Schema& schema) {
  const auto pos = text.find_first_of("!<>=");
  if (pos == std::string_view::npos || pos == 0) {
    throw Error(ErrorCode::kParse,
                "predicate '" + std::string(text) + "' is not column<op>value");
  }
  std::string_view rest = text.substr(pos);
  CompareOp op;
  std::size_t len = 1;
  if (rest.starts_with("!=")) {
    op = CompareOp::kNe, len = 2;
  } else if (rest.starts_with("<=")) {
    op = CompareOp::kLe, len = 2;
  } else if (rest.starts_with(">=")) {
    op = CompareOp::kGe, len = 2;
  } else if (rest.starts_with("==")) {
    op = CompareOp::kEq, len = 2;
  } else if (rest[0] == '=') {
    op = CompareOp::kEq;
  } else if (rest[0] == '<') {
    op = CompareOp::kLt;
  } else if (rest[0] == '>') {
    op = CompareOp::kGt;
  } else {
    throw Error(ErrorCode::kParse,
                "predicate '" + std::string(text) + "' has no valid operator");
  }
  // Blanks around the column name and the constant are not significant.
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  Predicate pred{std::string(trim(text.substr(0, pos))), op, {}};
  std::string_view constant = trim(rest.substr(len));
  const ColumnType type = schema[schema.index_of(pred.column)].type;
  const char* begin = constant.data();
  const char* end = begin + constant.size();
  if (type == ColumnType::kInt) {
    std::int64_t v = 0;
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end || constant.empty()) {
      throw Error(ErrorCode::kParse, "predicate constant '" +
                                         std::string(constant) +
                                         "' is not an integer");
    }
    pred.constant = v;
  } else if (type == ColumnType::kFloat) {
    double v = 0;
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end || constant.empty()) {
      throw Error(ErrorCode::kParse, "predicate constant '" +
                                         std::string(constant) +
                                         "' is not a number");
    }
    pred.constant = v;
  } else {
    pred.constant = std::string(constant);
  }
  return pred;
}

Table select(const Table& table, const Predicate& pred) {
  auto rows = matching_rows(table, pred);
  return gather_rows(table, rows);
}

Table& select_in_place(Table& table, const Predicate& pred) {
  auto rows = matching_rows(table, pred);
  if (rows.size() != table.row_count()) table.retain_rows(rows);
  return table;
}

Table project(const Table& table, const std::vector<std::string>& columns) {
  if (columns.empty()) {
    throw Error(ErrorCode::kSchemaMismatch, "project needs at least one column");
  }
  std::vector<Column> schema;
  std::vector<ColumnData> data;
  for (const std::string& name : columns) {
    const std::size_t c = table.schema().index_of(name);
    schema.push_back(table.schema()[c]);
    data.push_back(table.column(c));
  }
  return Table::from_columns(
      Schema(std::move(schema)), std::move(data),
      std::vector<RowId>(table.row_ids().begin(), table.row_ids().end()),
      table.pool(), table.next_row_id());
}

Table join(const Table& left, const Table& right, std::string_view left_col,
           std::string_view right_col) {
  const std::size_t lc = left.schema().index_of(left_col);
  const std::size_t rc = right.schema().index_of(right_col);
  if (left.schema()[lc].type != right.schema()[rc].type) {
    throw Error(ErrorCode::kTypeMismatch,
                "join columns '" + std::string(left_col) + "' and '" +
                    std::string(right_col) + "' differ in type");
  }
  const bool build_left = left.row_count() <= right.row_count();
  const Table& build = build_left ? left : right;
  const Table& probe = build_left ? right : left;
  const std::size_t bc = build_left ? lc : rc;
  const std::size_t pc = build_left ? rc : lc;
  const bool is_float = left.schema()[lc].type == ColumnType::kFloat;

  // Keys live in the build side's code space.
  auto bkeys = column_keys(build, bc, *build.pool());
  auto pkeys = column_keys(probe, pc, *build.pool());
  auto skip = [&](const Table& t, std::size_t c, std::size_t r) {
    return is_float && std::isnan(t.floats(c)[r]);
  };

  std::vector<std::pair<std::uint64_t, std::size_t>> entries;
  entries.reserve(build.row_count());
  for (std::size_t r = 0; r < build.row_count(); ++r) {
    if (bkeys[r] && !skip(build, bc, r)) entries.emplace_back(*bkeys[r], r);
  }
  std::sort(entries.begin(), entries.end());
  std::unordered_map<std::uint64_t, std::pair<std::size_t, std::size_t>> index;
  index.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].first == entries[i].first) ++j;
    index.emplace(entries[i].first, std::make_pair(i, j));
    i = j;
  }

  const unsigned workers = default_workers();
  const std::size_t n = probe.row_count();
  const std::size_t parts = chunk_count(n, workers);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(parts);
  parallel::for_chunks(n, parts, workers, [&](std::size_t p, parallel::Range range) {
    for (std::size_t r = range.begin; r < range.end; ++r) {
      if (!pkeys[r] || skip(probe, pc, r)) continue;
      auto it = index.find(*pkeys[r]);
      if (it == index.end()) continue;
      for (std::size_t i = it->second.first; i < it->second.second; ++i) {
        out[p].emplace_back(r, entries[i].second);
      }
    }
  });

  std::vector<std::size_t> lrows, rrows;
  for (const auto& chunk : out) {
    for (auto [pr, br] : chunk) {
      lrows.push_back(build_left ? br : pr);
      rrows.push_back(build_left ? pr : br);
    }
  }
  return assemble_pairs(left, right, lrows, rrows);
}

Table group_aggregate(const Table& table,
                      const std::vector<std::string>& group_cols,
                      const std::vector<Aggregate>& aggs) {
  const Schema& schema = table.schema();
  std::vector<std::size_t> gcols;
  for (const auto& name : group_cols) gcols.push_back(schema.index_of(name));
  std::vector<std::size_t> acols;
  std::vector<Column> out_schema;
  for (std::size_t c : gcols) out_schema.push_back(schema[c]);
  for (const Aggregate& a : aggs) {
    const std::size_t c = schema.index_of(a.column);
    const ColumnType type = schema[c].type;
    if ((a.fn == AggFn::kSum || a.fn == AggFn::kMean) &&
        type == ColumnType::kString) {
      throw Error(ErrorCode::kTypeMismatch,
                  std::string(agg_fn_name(a.fn)) + " needs a numeric column, '" +
                      a.column + "' is str");
    }
    ColumnType out_type = type;
    if (a.fn == AggFn::kCount) out_type = ColumnType::kInt;
    if (a.fn == AggFn::kMean) out_type = ColumnType::kFloat;
    acols.push_back(c);
    out_schema.push_back({std::string(agg_fn_name(a.fn)) + "_" + a.column, out_type});
  }
  Schema result_schema(std::move(out_schema));

  // Group ids in first-occurrence order.
  auto keys = tuple_keys(table, gcols, *table.pool());
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, TupleHash> groups;
  std::vector<std::size_t> group_of(table.row_count());
  std::vector<std::size_t> first_row;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    auto [it, fresh] = groups.try_emplace(std::move(*keys[r]), first_row.size());
    if (fresh) first_row.push_back(r);
    group_of[r] = it->second;
  }
  const std::size_t g = first_row.size();

  std::vector<ColumnData> cols;
  CodeRemap same(*table.pool(), *table.pool());
  for (std::size_t c : gcols) cols.push_back(gather_column(table, c, first_row, same));

  std::vector<std::int64_t> counts(g, 0);
  for (std::size_t r = 0; r < table.row_count(); ++r) ++counts[group_of[r]];

  for (std::size_t a = 0; a < aggs.size(); ++a) {
    const std::size_t c = acols[a];
    const ColumnType type = schema[c].type;
    switch (aggs[a].fn) {
      case AggFn::kCount:
        cols.push_back(counts);
        break;
      case AggFn::kSum:
      case AggFn::kMean: {
        if (type == ColumnType::kInt && aggs[a].fn == AggFn::kSum) {
          std::vector<std::int64_t> sums(g, 0);
          auto v = table.ints(c);
          for (std::size_t r = 0; r < v.size(); ++r) sums[group_of[r]] += v[r];
          cols.push_back(std::move(sums));
          break;
        }
        std::vector<double> sums(g, 0.0);
        for (std::size_t r = 0; r < table.row_count(); ++r) {
          sums[group_of[r]] += table.numeric_at(c, r);
        }
        if (aggs[a].fn == AggFn::kMean) {
          for (std::size_t i = 0; i < g; ++i) sums[i] /= static_cast<double>(counts[i]);
        }
        cols.push_back(std::move(sums));
        break;
      }
      case AggFn::kMin:
      case AggFn::kMax: {
        const bool want_min = aggs[a].fn == AggFn::kMin;
        std::vector<std::size_t> best(first_row);
        for (std::size_t r = 0; r < table.row_count(); ++r) {
          std::size_t& b = best[group_of[r]];
          const int cmp = compare_cells(table, c, r, table, c, b);
          if (want_min ? cmp < 0 : cmp > 0) b = r;
        }
        cols.push_back(gather_column(table, c, best, same));
        break;
      }
    }
  }
  const auto n = static_cast<RowId>(g);
  return Table::from_columns(std::move(result_schema), std::move(cols),
                             fresh_ids(g), table.pool(), n);
}

Table order(const Table& table, const std::vector<std::string>& cols,
            bool ascending) {
  std::vector<std::size_t> idx;
  for (const auto& name : cols) idx.push_back(table.schema().index_of(name));
  std::vector<std::size_t> perm(table.row_count());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto ids = table.row_ids();
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t c : idx) {
      int cmp = compare_cells(table, c, a, table, c, b);
      if (cmp != 0) return ascending ? cmp < 0 : cmp > 0;
    }
    return ids[a] < ids[b];
  });
  return gather_rows(table, perm);
}

Table set_op(const Table& left, const Table& right, SetOp op) {
  if (!(left.schema() == right.schema())) {
    throw Error(ErrorCode::kSchemaMismatch,
                "set operation on different schemas " + left.schema().to_string() +
                    " and " + right.schema().to_string());
  }
  std::vector<std::size_t> lrows, rrows;
  if (op == SetOp::kUnion) {
    lrows.resize(left.row_count());
    std::iota(lrows.begin(), lrows.end(), std::size_t{0});
    rrows.resize(right.row_count());
    std::iota(rrows.begin(), rrows.end(), std::size_t{0});
  } else {
    std::vector<std::size_t> all(left.column_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    auto lkeys = tuple_keys(left, all, *left.pool());
    auto rkeys = tuple_keys(right, all, *left.pool());
    std::unordered_map<std::vector<std::uint64_t>, std::int64_t, TupleHash> budget;
    for (auto& k : rkeys) {
      if (k) ++budget[std::move(*k)];
    }
    for (std::size_t r = 0; r < left.row_count(); ++r) {
      auto it = budget.find(*lkeys[r]);
      const bool matched = it != budget.end() && it->second > 0;
      if (matched) --it->second;
      if (matched == (op == SetOp::kIntersection)) lrows.push_back(r);
    }
  }

  auto pool = output_pool(left, right);
  CodeRemap lmap(*left.pool(), *pool);
  CodeRemap rmap(*right.pool(), *pool);
  std::vector<ColumnData> cols;
  for (std::size_t c = 0; c < left.column_count(); ++c) {
    ColumnData col = gather_column(left, c, lrows, lmap);
    append_column(col, gather_column(right, c, rrows, rmap));
    cols.push_back(std::move(col));
  }
  const std::size_t n = lrows.size() + rrows.size();
  return Table::from_columns(left.schema(), std::move(cols), fresh_ids(n),
                             std::move(pool), static_cast<RowId>(n));
}

Table sim_join(const Table& left, const Table& right,
               const std::vector<ColumnPair>& cols, Metric metric,
               double threshold) {
  if (cols.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "sim_join needs at least one column pair");
  }
  if (!(threshold >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "sim_join threshold must be non-negative");
  }
  const std::size_t dims = cols.size();
  const std::size_t nl = left.row_count();
  const std::size_t nr = right.row_count();
  // Row-major coordinate matrices.
  std::vector<double> lx(nl * dims), rx(nr * dims);
  for (std::size_t d = 0; d < dims; ++d) {
    const std::size_t lc = left.schema().index_of(cols[d].left);
    const std::size_t rc = right.schema().index_of(cols[d].right);
    if (left.schema()[lc].type == ColumnType::kString) {
      throw Error(ErrorCode::kTypeMismatch,
                  "sim_join column '" + cols[d].left + "' is not numeric");
    }
    if (right.schema()[rc].type == ColumnType::kString) {
      throw Error(ErrorCode::kTypeMismatch,
                  "sim_join column '" + cols[d].right + "' is not numeric");
    }
    for (std::size_t r = 0; r < nl; ++r) lx[r * dims + d] = left.numeric_at(lc, r);
    for (std::size_t r = 0; r < nr; ++r) rx[r * dims + d] = right.numeric_at(rc, r);
  }

  auto distance = [&](std::size_t i, std::size_t j) {
    double acc = 0.0;
    for (std::size_t d = 0; d < dims; ++d) {
      const double diff = lx[i * dims + d] - rx[j * dims + d];
      acc += metric == Metric::kL1 ? std::fabs(diff) : diff * diff;
    }
    return metric == Metric::kL1 ? acc : std::sqrt(acc);
  };

  // Single-column L1 over finite values: binary-search a widened window in
  // the sorted right column, then apply the exact test to the candidates.
  const bool window_path =
      dims == 1 && metric == Metric::kL1 &&
      std::all_of(lx.begin(), lx.end(), [](double x) { return std::isfinite(x); }) &&
      std::all_of(rx.begin(), rx.end(), [](double x) { return std::isfinite(x); });
  std::vector<std::size_t> sorted_right;
  if (window_path) {
    sorted_right.resize(nr);
    std::iota(sorted_right.begin(), sorted_right.end(), std::size_t{0});
    std::stable_sort(sorted_right.begin(), sorted_right.end(),
                     [&](std::size_t a, std::size_t b) { return rx[a] < rx[b]; });
  }

  const unsigned workers = default_workers();
  const std::size_t parts = std::max<std::size_t>(
      1, std::min<std::size_t>(workers * 4, nl / 64));
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(parts);
  parallel::for_chunks(nl, parts, workers, [&](std::size_t p, parallel::Range range) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = range.begin; i < range.end; ++i) {
      if (!window_path) {
        for (std::size_t j = 0; j < nr; ++j) {
          if (distance(i, j) < threshold) out[p].emplace_back(i, j);
        }
        continue;
      }
      const double a = lx[i];
      const double slack = (std::fabs(a) + threshold) * 4 *
                           std::numeric_limits<double>::epsilon();
      const double lo = a - threshold - slack;
      const double hi = a + threshold + slack;
      auto first = std::lower_bound(
          sorted_right.begin(), sorted_right.end(), lo,
          [&](std::size_t j, double v) { return rx[j] < v; });
      auto last = std::upper_bound(
          first, sorted_right.end(), hi,
          [&](double v, std::size_t j) { return v < rx[j]; });
      candidates.clear();
      for (auto it = first; it != last; ++it) {
        if (distance(i, *it) < threshold) candidates.push_back(*it);
      }
      std::sort(candidates.begin(), candidates.end());
      for (std::size_t j : candidates) out[p].emplace_back(i, j);
    }
  });

  std::vector<std::size_t> lrows, rrows;
  for (const auto& chunk : out) {
    for (auto [i, j] : chunk) {
      lrows.push_back(i);
      rrows.push_back(j);
    }
  }
  return assemble_pairs(left, right, lrows, rrows);
}

Table next_k(const Table& table, std::string_view group_col,
             std::string_view order_col, std::int64_t k) {
  const std::size_t gc = table.schema().index_of(group_col);
  const std::size_t oc = table.schema().index_of(order_col);
  if (table.schema()[oc].type == ColumnType::kString) {
    throw Error(ErrorCode::kTypeMismatch,
                "next_k order column '" + std::string(order_col) +
                    "' must be numeric");
  }
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "next_k needs k >= 1, got " + std::to_string(k));
  }
  auto keys = column_keys(table, gc, *table.pool());
  std::unordered_map<std::uint64_t, std::size_t> group_index;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    auto [it, fresh] = group_index.try_emplace(*keys[r], groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(r);
  }

  auto ids = table.row_ids();
  std::vector<std::size_t> lrows, rrows;
  for (auto& members : groups) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      const int cmp = compare_cells(table, oc, a, table, oc, b);
      if (cmp != 0) return cmp < 0;
      return ids[a] < ids[b];
    });
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::size_t stop =
          std::min(members.size(), i + 1 + static_cast<std::size_t>(k));
      for (std::size_t j = i + 1; j < stop; ++j) {
        lrows.push_back(members[i]);
        rrows.push_back(members[j]);
      }
    }
  }
  return assemble_pairs(table, table, lrows, rrows);
}

EncodedStrings encode_strings(const Table& table, std::string_view col) {
  const std::size_t c = table.schema().index_of(col);
  auto codes = table.codes(c);
  std::vector<std::int64_t> dense(table.pool()->size(), -1);
  std::vector<std::int64_t> out(codes.size());
  Table dictionary(Schema{{"code", ColumnType::kInt}, {"value", ColumnType::kString}});
  std::int64_t next = 0;
  for (std::size_t r = 0; r < codes.size(); ++r) {
    std::int64_t& d = dense[codes[r]];
    if (d < 0) {
      d = next++;
      dictionary.append_row({d, std::string(table.pool()->at(codes[r]))});
    }
    out[r] = d;
  }

  std::vector<Column> schema(table.schema().begin(), table.schema().end());
  schema[c].type = ColumnType::kInt;
  std::vector<ColumnData> data;
  for (std::size_t i = 0; i < table.column_count(); ++i) {
    if (i == c) {
      data.push_back(std::move(out));
    } else {
      data.push_back(table.column(i));
    }
  }
  Table encoded = Table::from_columns(
      Schema(std::move(schema)), std::move(data),
      std::vector<RowId>(table.row_ids().begin(), table.row_ids().end()),
      table.pool(), table.next_row_id());
  return {std::move(encoded), std::move(dictionary)};
}

Table table_from_pairs(std::vector<std::pair<std::int64_t, double>> pairs,
                       const std::string& key_name,
                       const std::string& value_name) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::int64_t> keys(pairs.size());
  std::vector<double> values(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    keys[i] = pairs[i].first;
    values[i] = pairs[i].second;
  }
  std::vector<ColumnData> cols;
  cols.push_back(std::move(keys));
  cols.push_back(std::move(values));
  return Table::from_columns(
      Schema{{key_name, ColumnType::kInt}, {value_name, ColumnType::kFloat}},
      std::move(cols), fresh_ids(pairs.size()), nullptr,
      static_cast<RowId>(pairs.size()));
}

}  // namespace tablegraph
