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

#ifndef TABLEGRAPH_TABLE_H_
#define TABLEGRAPH_TABLE_H_

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tablegraph/error.h"

namespace tablegraph {

enum class ColumnType { kInt, kFloat, kString };

const char* column_type_name(ColumnType type);

struct Column {
  std::string name;
  ColumnType type;

  friend bool operator==(const Column&, const Column&) = default;
};

// Ordered, non-empty list of uniquely named, typed columns.
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<Column> columns);
  Schema(std::initializer_list<Column> columns)
      : Schema(std::vector<Column>(columns)) {}

  // Parses "name:type,name:type"; type is one of int, float, str (or the
  // long forms integer, double, string).
  static Schema parse(std::string_view spec);

  std::size_t size() const { return columns_.size(); }
  const Column& operator[](std::size_t i) const { return columns_[i]; }
  auto begin() const { return columns_.begin(); }
  auto end() const { return columns_.end(); }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws kUnknownColumn.
  std::size_t index_of(std::string_view name) const;

  std::string to_string() const;

  friend bool operator==(const Schema& a, const Schema& b) {
    return a.columns_ == b.columns_;
  }

 private:
  std::vector<Column> columns_;
};

// Interned strings. Append-only; codes are dense and stable. Mutation is
// single-threaded; concurrent readers are fine once no one is interning.
class StringPool {
 public:
  std::uint32_t intern(std::string_view s);
  std::optional<std::uint32_t> find(std::string_view s) const;
  std::string_view at(std::uint32_t code) const { return strings_[code]; }
  std::size_t size() const { return strings_.size(); }

 private:
  std::deque<std::string> strings_;
  std::unordered_map<std::string_view, std::uint32_t> codes_;
};

using RowId = std::int64_t;
using Value = std::variant<std::int64_t, double, std::string>;
using ColumnData = std::variant<std::vector<std::int64_t>, std::vector<double>,
                                std::vector<std::uint32_t>>;

ColumnType value_type(const Value& v);
std::string value_to_string(const Value& v);

/// Columnar table. Every row carries a persistent id that survives in-place
/// filtering and reordering; ids are unique within the table and never reused
/// by it. String columns hold codes into a shared, append-only pool.
class Table {
 public:
  Table() = default;
  explicit Table(Schema schema, std::shared_ptr<StringPool> pool = nullptr);

  // Assembles a table from prepared columns. Validates column count, types
  // and lengths. `next_row_id` must exceed every id in `row_ids`.
  static Table from_columns(Schema schema, std::vector<ColumnData> columns,
                            std::vector<RowId> row_ids,
                            std::shared_ptr<StringPool> pool,
                            RowId next_row_id);

  const Schema& schema() const { return schema_; }
  std::size_t row_count() const { return row_ids_.size(); }
  std::size_t column_count() const { return schema_.size(); }
  std::span<const RowId> row_ids() const { return row_ids_; }
  RowId next_row_id() const { return next_row_id_; }
  const std::shared_ptr<StringPool>& pool() const { return pool_; }

  const ColumnData& column(std::size_t col) const { return columns_[col]; }
  std::span<const std::int64_t> ints(std::size_t col) const;
  std::span<const double> floats(std::size_t col) const;
  std::span<const std::uint32_t> codes(std::size_t col) const;
  std::span<const std::int64_t> ints(std::string_view name) const {
    return ints(schema_.index_of(name));
  }
  std::span<const double> floats(std::string_view name) const {
    return floats(schema_.index_of(name));
  }

  std::string_view string_at(std::size_t col, std::size_t row) const;
  // Int or float cell widened to double; throws kTypeMismatch on strings.
  double numeric_at(std::size_t col, std::size_t row) const;
  Value cell(std::size_t row, std::size_t col) const;
  std::vector<Value> row(std::size_t row) const;

  void reserve(std::size_t rows);
  // Appends one row with a fresh id. Types must match the schema exactly.
  RowId append_row(std::span<const Value> values);
  RowId append_row(std::initializer_list<Value> values) {
    return append_row(std::span<const Value>(values.begin(), values.size()));
  }

  // Keeps only rows whose index is listed (ascending), ids untouched.
  void retain_rows(std::span<const std::size_t> rows);

  std::size_t memory_bytes() const;

 private:
  Schema schema_;
  std::vector<ColumnData> columns_;
  std::vector<RowId> row_ids_;
  std::shared_ptr<StringPool> pool_;
  RowId next_row_id_ = 0;
};

// Same schema and same decoded cells in the same order; row ids ignored.
bool cells_equal(const Table& a, const Table& b);

}  // namespace tablegraph

#endif  // TABLEGRAPH_TABLE_H_
