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

#include <vector>

#include <gtest/gtest.h>

#include "tablegraph/error.h"
#include "tablegraph/table.h"

namespace tablegraph {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(SchemaTest, ParsesTypeAliases) {
  Schema s = Schema::parse("id:int,score:double,name:string");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].type, ColumnType::kInt);
  EXPECT_EQ(s[1].type, ColumnType::kFloat);
  EXPECT_EQ(s[2].type, ColumnType::kString);
  EXPECT_EQ(s.index_of("score"), 1u);
  EXPECT_FALSE(s.find("nope").has_value());
  EXPECT_EQ(s.to_string(), "id:int,score:float,name:str");
}

TEST(SchemaTest, RejectsBadSchemas) {
  EXPECT_EQ(code_of([] { Schema::parse("a:int,a:str"); }), ErrorCode::kSchemaMismatch);
  EXPECT_EQ(code_of([] { Schema::parse("a:blob"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { Schema(std::vector<Column>{}); }), ErrorCode::kSchemaMismatch);
  EXPECT_EQ(code_of([] { Schema::parse("a:int").index_of("b"); }),
            ErrorCode::kUnknownColumn);
}

TEST(StringPoolTest, InternsOnce) {
  StringPool pool;
  EXPECT_EQ(pool.intern("a"), 0u);
  EXPECT_EQ(pool.intern("b"), 1u);
  EXPECT_EQ(pool.intern("a"), 0u);
  EXPECT_EQ(pool.at(1), "b");
  EXPECT_EQ(pool.find("b"), 1u);
  EXPECT_FALSE(pool.find("c").has_value());
  // Views stay valid as the pool grows.
  std::string_view first = pool.at(0);
  for (int i = 0; i < 10000; ++i) pool.intern("s" + std::to_string(i));
  EXPECT_EQ(first, "a");
}

TEST(TableTest, AppendAssignsIncreasingRowIds) {
  Table t(Schema::parse("id:int,name:str,w:float"));
  EXPECT_EQ(t.append_row({Value(std::int64_t{1}), Value("x"), Value(0.5)}), 0);
  EXPECT_EQ(t.append_row({Value(std::int64_t{2}), Value("y"), Value(1.5)}), 1);
  EXPECT_EQ(t.row_count(), 2u);
  EXPECT_EQ(t.string_at(1, 1), "y");
  EXPECT_EQ(t.numeric_at(0, 1), 2.0);
  EXPECT_EQ(t.cell(0, 2), Value(0.5));
  EXPECT_EQ(t.next_row_id(), 2);
}

TEST(TableTest, AppendChecksArityAndTypes) {
  Table t(Schema::parse("id:int,name:str"));
  EXPECT_EQ(code_of([&] { t.append_row({Value(std::int64_t{1})}); }),
            ErrorCode::kArityMismatch);
  EXPECT_EQ(code_of([&] { t.append_row({Value(1.0), Value("x")}); }),
            ErrorCode::kTypeMismatch);
  EXPECT_EQ(t.row_count(), 0u);
  EXPECT_EQ(code_of([&] { (void)t.floats(0); }), ErrorCode::kTypeMismatch);
}

TEST(TableTest, RetainKeepsIdsAndCells) {
  Table t(Schema::parse("v:int"));
  for (std::int64_t i = 0; i < 6; ++i) t.append_row({Value(i * 10)});
  std::vector<std::size_t> keep{1, 4, 5};
  t.retain_rows(keep);
  ASSERT_EQ(t.row_count(), 3u);
  EXPECT_EQ(std::vector<RowId>(t.row_ids().begin(), t.row_ids().end()),
            (std::vector<RowId>{1, 4, 5}));
  EXPECT_EQ(t.cell(2, 0), Value(std::int64_t{50}));
  // Ids are never reused.
  EXPECT_EQ(t.append_row({Value(std::int64_t{7})}), 6);
}

TEST(TableTest, CellsEqualIgnoresRowIds) {
  Table a(Schema::parse("v:int,s:str"));
  Table b(Schema::parse("v:int,s:str"));
  b.append_row({Value(std::int64_t{0}), Value("pad")});
  b.retain_rows(std::vector<std::size_t>{});
  a.append_row({Value(std::int64_t{3}), Value("q")});
  b.append_row({Value(std::int64_t{3}), Value("q")});
  EXPECT_NE(a.row_ids()[0], b.row_ids()[0]);
  EXPECT_TRUE(cells_equal(a, b));
  b.append_row({Value(std::int64_t{4}), Value("q")});
  EXPECT_FALSE(cells_equal(a, b));
}

TEST(TableTest, MemoryGrowsWithRows) {
  Table t(Schema::parse("v:int"));
  const auto empty = t.memory_bytes();
  for (std::int64_t i = 0; i < 1000; ++i) t.append_row({Value(i)});
  EXPECT_GE(t.memory_bytes(), empty + 1000 * 2 * sizeof(std::int64_t));
}

}  // namespace
}  // namespace tablegraph
