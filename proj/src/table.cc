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

#include "tablegraph/table.h"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace tablegraph {

const char* column_type_name(ColumnType type) {
  switch (type) {
    case ColumnType::kInt: return "int";
    case ColumnType::kFloat: return "float";
    case ColumnType::kString: return "str";
  }
  return "?";
}

Schema::Schema(std::vector<Column> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) {
    throw Error(ErrorCode::kSchemaMismatch, "schema needs at least one column");
  }
  std::unordered_set<std::string_view> seen;
  for (const Column& c : columns_) {
    if (c.name.empty()) {
      throw Error(ErrorCode::kSchemaMismatch, "empty column name in schema");
    }
    if (!seen.insert(c.name).second) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "duplicate column name '" + c.name + "'");
    }
  }
}

Schema Schema::parse(std::string_view spec) {
  std::vector<Column> cols;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{}
                                           : spec.substr(comma + 1);
    auto colon = item.rfind(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  "schema entry '" + std::string(item) + "' lacks ':type'");
    }
    std::string_view type = item.substr(colon + 1);
    ColumnType t;
    if (type == "int" || type == "integer" || type == "int64") {
      t = ColumnType::kInt;
    } else if (type == "float" || type == "double") {
      t = ColumnType::kFloat;
    } else if (type == "str" || type == "string") {
      t = ColumnType::kString;
    } else {
      throw Error(ErrorCode::kParse,
                  "unknown column type '" + std::string(type) + "'");
    }
    cols.push_back({std::string(item.substr(0, colon)), t});
  }
  return Schema(std::move(cols));
}

std::optional<std::size_t> Schema::find(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Schema::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::kUnknownColumn,
              "unknown column '" + std::string(name) + "'");
}

std::string Schema::to_string() const {
  std::string out;
  for (const Column& c : columns_) {
    if (!out.empty()) out += ',';
    out += c.name;
    out += ':';
    out += column_type_name(c.type);
  }
  return out;
}

std::uint32_t StringPool::intern(std::string_view s) {
  if (auto it = codes_.find(s); it != codes_.end()) return it->second;
  const auto code = static_cast<std::uint32_t>(strings_.size());
  const std::string& stored = strings_.emplace_back(s);
  codes_.emplace(stored, code);
  return code;
}

std::optional<std::uint32_t> StringPool::find(std::string_view s) const {
  if (auto it = codes_.find(s); it != codes_.end()) return it->second;
  return std::nullopt;
}

ColumnType value_type(const Value& v) {
  switch (v.index()) {
    case 0: return ColumnType::kInt;
    case 1: return ColumnType::kFloat;
    default: return ColumnType::kString;
  }
}

std::string value_to_string(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), *d);
    return std::string(buf, res.ptr);
  }
  return std::get<std::string>(v);
}

namespace {

ColumnData empty_column(ColumnType type) {
  switch (type) {
    case ColumnType::kInt: return std::vector<std::int64_t>{};
    case ColumnType::kFloat: return std::vector<double>{};
    case ColumnType::kString: return std::vector<std::uint32_t>{};
  }
  return {};
}

std::size_t column_length(const ColumnData& c) {
  return std::visit([](const auto& v) { return v.size(); }, c);
}

bool column_matches(const ColumnData& c, ColumnType type) {
  return static_cast<std::size_t>(c.index()) == static_cast<std::size_t>(type);
}

Error wrong_type(const Schema& schema, std::size_t col, const char* wanted) {
  return Error(ErrorCode::kTypeMismatch,
               "column '" + schema[col].name + "' is " +
                   column_type_name(schema[col].type) + ", not " + wanted);
}

}  // namespace

Table::Table(Schema schema, std::shared_ptr<StringPool> pool)
    : schema_(std::move(schema)),
      pool_(pool ? std::move(pool) : std::make_shared<StringPool>()) {
  columns_.reserve(schema_.size());
  for (const Column& c : schema_) columns_.push_back(empty_column(c.type));
}

Table Table::from_columns(Schema schema, std::vector<ColumnData> columns,
                          std::vector<RowId> row_ids,
                          std::shared_ptr<StringPool> pool,
                          RowId next_row_id) {
  if (columns.size() != schema.size()) {
    throw Error(ErrorCode::kSchemaMismatch,
                "column count does not match schema " + schema.to_string());
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (!column_matches(columns[i], schema[i].type)) {
      throw wrong_type(schema, i, "the stored type");
    }
    if (column_length(columns[i]) != row_ids.size()) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "column '" + schema[i].name + "' length differs from row count");
    }
  }
  Table t;
  t.schema_ = std::move(schema);
  t.columns_ = std::move(columns);
  t.row_ids_ = std::move(row_ids);
  t.pool_ = pool ? std::move(pool) : std::make_shared<StringPool>();
  t.next_row_id_ = next_row_id;
  return t;
}

std::span<const std::int64_t> Table::ints(std::size_t col) const {
  if (const auto* v = std::get_if<std::vector<std::int64_t>>(&columns_[col])) {
    return *v;
  }
  throw wrong_type(schema_, col, "int");
}

std::span<const double> Table::floats(std::size_t col) const {
  if (const auto* v = std::get_if<std::vector<double>>(&columns_[col])) {
    return *v;
  }
  throw wrong_type(schema_, col, "float");
}

std::span<const std::uint32_t> Table::codes(std::size_t col) const {
  if (const auto* v = std::get_if<std::vector<std::uint32_t>>(&columns_[col])) {
    return *v;
  }
  throw wrong_type(schema_, col, "str");
}

std::string_view Table::string_at(std::size_t col, std::size_t row) const {
  return pool_->at(codes(col)[row]);
}

double Table::numeric_at(std::size_t col, std::size_t row) const {
  switch (schema_[col].type) {
    case ColumnType::kInt:
      return static_cast<double>(std::get<0>(columns_[col])[row]);
    case ColumnType::kFloat:
      return std::get<1>(columns_[col])[row];
    case ColumnType::kString:
      break;
  }
  throw wrong_type(schema_, col, "numeric");
}

Value Table::cell(std::size_t row, std::size_t col) const {
  switch (schema_[col].type) {
    case ColumnType::kInt: return std::get<0>(columns_[col])[row];
    case ColumnType::kFloat: return std::get<1>(columns_[col])[row];
    case ColumnType::kString: return std::string(string_at(col, row));
  }
  return {};
}

std::vector<Value> Table::row(std::size_t r) const {
  std::vector<Value> out;
  out.reserve(column_count());
  for (std::size_t c = 0; c < column_count(); ++c) out.push_back(cell(r, c));
  return out;
}

void Table::reserve(std::size_t rows) {
  row_ids_.reserve(rows);
  for (auto& c : columns_) {
    std::visit([rows](auto& v) { v.reserve(rows); }, c);
  }
}

RowId Table::append_row(std::span<const Value> values) {
  if (values.size() != schema_.size()) {
    throw Error(ErrorCode::kArityMismatch,
                "row has " + std::to_string(values.size()) +
                    " values, schema has " + std::to_string(schema_.size()));
  }
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (value_type(values[c]) != schema_[c].type) {
      throw Error(ErrorCode::kTypeMismatch,
                  "value for column '" + schema_[c].name + "' is " +
                      column_type_name(value_type(values[c])) + ", expected " +
                      column_type_name(schema_[c].type));
    }
  }
  for (std::size_t c = 0; c < values.size(); ++c) {
    switch (schema_[c].type) {
      case ColumnType::kInt:
        std::get<0>(columns_[c]).push_back(std::get<std::int64_t>(values[c]));
        break;
      case ColumnType::kFloat:
        std::get<1>(columns_[c]).push_back(std::get<double>(values[c]));
        break;
      case ColumnType::kString:
        std::get<2>(columns_[c]).push_back(
            pool_->intern(std::get<std::string>(values[c])));
        break;
    }
  }
  row_ids_.push_back(next_row_id_);
  return next_row_id_++;
}

void Table::retain_rows(std::span<const std::size_t> rows) {
  auto compact = [rows](auto& v) {
    for (std::size_t i = 0; i < rows.size(); ++i) v[i] = v[rows[i]];
    v.resize(rows.size());
  };
  compact(row_ids_);
  for (auto& c : columns_) std::visit(compact, c);
}

std::size_t Table::memory_bytes() const {
  std::size_t bytes = row_ids_.capacity() * sizeof(RowId);
  for (const auto& c : columns_) {
    bytes += std::visit(
        [](const auto& v) { return v.capacity() * sizeof(v[0]); }, c);
  }
  return bytes;
}

bool cells_equal(const Table& a, const Table& b) {
  if (!(a.schema() == b.schema()) || a.row_count() != b.row_count()) {
    return false;
  }
  for (std::size_t c = 0; c < a.column_count(); ++c) {
    const ColumnType type = a.schema()[c].type;
    for (std::size_t r = 0; r < a.row_count(); ++r) {
      bool same = true;
      switch (type) {
        case ColumnType::kInt: same = a.ints(c)[r] == b.ints(c)[r]; break;
        case ColumnType::kFloat: {
          const double x = a.floats(c)[r];
          const double y = b.floats(c)[r];
          same = x == y || (x != x && y != y);
          break;
        }
        case ColumnType::kString:
          same = a.string_at(c, r) == b.string_at(c, r);
          break;
      }
      if (!same) return false;
    }
  }
  return true;
}

}  // namespace tablegraph
