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

#include "tablegraph/tsv.h"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tablegraph {
namespace {

Error parse_error(std::size_t line, const Column& col, std::string_view field) {
  return Error(ErrorCode::kParse,
               "line " + std::to_string(line) + ", column " + col.name +
                   ": cannot parse '" + std::string(field) + "' as " +
                   column_type_name(col.type));
}

}  // namespace

Table parse_tsv(std::string_view text, const Schema& schema) {
  const std::size_t ncols = schema.size();
  std::vector<ColumnData> cols;
  for (const Column& c : schema) {
    switch (c.type) {
      case ColumnType::kInt: cols.emplace_back(std::vector<std::int64_t>{}); break;
      case ColumnType::kFloat: cols.emplace_back(std::vector<double>{}); break;
      case ColumnType::kString: cols.emplace_back(std::vector<std::uint32_t>{}); break;
    }
  }
  auto pool = std::make_shared<StringPool>();
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;

    std::size_t field_start = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
      std::size_t tab = line.find('\t', field_start);
      const bool last = c + 1 == ncols;
      if ((tab == std::string_view::npos) != last) {
        std::size_t fields = 1;
        for (char ch : line) fields += ch == '\t';
        throw Error(ErrorCode::kArityMismatch,
                    "line " + std::to_string(line_no) + ": expected " +
                        std::to_string(ncols) + " fields, found " +
                        std::to_string(fields));
      }
      if (last) tab = line.size();
      std::string_view field = line.substr(field_start, tab - field_start);
      field_start = tab + 1;
      const char* begin = field.data();
      const char* end = begin + field.size();
      switch (schema[c].type) {
        case ColumnType::kInt: {
          std::int64_t v = 0;
          auto res = std::from_chars(begin, end, v);
          if (field.empty() || res.ec != std::errc() || res.ptr != end) {
            throw parse_error(line_no, schema[c], field);
          }
          std::get<0>(cols[c]).push_back(v);
          break;
        }
        case ColumnType::kFloat: {
          double v = 0;
          auto res = std::from_chars(begin, end, v);
          if (field.empty() || res.ec != std::errc() || res.ptr != end) {
            throw parse_error(line_no, schema[c], field);
          }
          std::get<1>(cols[c]).push_back(v);
          break;
        }
        case ColumnType::kString:
          std::get<2>(cols[c]).push_back(pool->intern(field));
          break;
      }
    }
  }
  std::vector<RowId> ids(line_no);
  for (std::size_t i = 0; i < line_no; ++i) ids[i] = static_cast<RowId>(i);
  return Table::from_columns(schema, std::move(cols), std::move(ids),
                             std::move(pool), static_cast<RowId>(line_no));
}

Table load_tsv(const std::filesystem::path& path, const Schema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  }
  std::string text;
  in.seekg(0, std::ios::end);
  const auto size = in.tellg();
  in.seekg(0, std::ios::beg);
  if (size > 0) {
    text.resize(static_cast<std::size_t>(size));
    in.read(text.data(), size);
  }
  if (!in && !in.eof()) {
    throw Error(ErrorCode::kIo, "read failed on '" + path.string() + "'");
  }
  return parse_tsv(text, schema);
}

void write_tsv(const Table& table, std::ostream& out) {
  const std::size_t ncols = table.column_count();
  std::string line;
  char buf[64];
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    line.clear();
    for (std::size_t c = 0; c < ncols; ++c) {
      if (c > 0) line += '\t';
      switch (table.schema()[c].type) {
        case ColumnType::kInt: {
          auto res = std::to_chars(buf, buf + sizeof(buf), table.ints(c)[r]);
          line.append(buf, res.ptr);
          break;
        }
        case ColumnType::kFloat: {
          auto res = std::to_chars(buf, buf + sizeof(buf), table.floats(c)[r]);
          line.append(buf, res.ptr);
          break;
        }
        case ColumnType::kString: {
          std::string_view s = table.string_at(c, r);
          if (s.find_first_of("\t\n") != std::string_view::npos) {
            throw Error(ErrorCode::kInvalidArgument,
                        "row " + std::to_string(r) + ", column " +
                            table.schema()[c].name +
                            ": string contains a tab or newline");
          }
          line += s;
          break;
        }
      }
    }
    line += '\n';
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

void save_tsv(const Table& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  }
  write_tsv(table, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed on '" + path.string() + "'");
}

}  // namespace tablegraph
