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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "tablegraph/error.h"
#include "tablegraph/tsv.h"

namespace tablegraph {
namespace {

Error error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorCode::kIo, "");
}

TEST(TsvTest, ParsesTypedColumns) {
  Table t = parse_tsv("1\tJava\t0.5\n2\tGo\t-3\n", Schema::parse("id:int,tag:str,w:float"));
  ASSERT_EQ(t.row_count(), 2u);
  EXPECT_EQ(t.cell(1, 0), Value(std::int64_t{2}));
  EXPECT_EQ(t.cell(0, 1), Value("Java"));
  EXPECT_EQ(t.cell(1, 2), Value(-3.0));
  EXPECT_EQ(t.row_ids()[1], 1);
}

TEST(TsvTest, TrailingNewlineIsOptional) {
  const Schema s = Schema::parse("a:int");
  EXPECT_EQ(parse_tsv("1\n2", s).row_count(), 2u);
  EXPECT_EQ(parse_tsv("", s).row_count(), 0u);
}

TEST(TsvTest, ReportsLineAndColumnOnBadCell) {
  Error e = error_of([] { parse_tsv("abc\tx\n", Schema::parse("id:int,name:str")); });
  EXPECT_EQ(e.code(), ErrorCode::kParse);
  EXPECT_NE(std::string(e.what()).find("line 1, column id"), std::string::npos) << e.what();
}

TEST(TsvTest, RejectsShortLines) {
  Error e = error_of([] { parse_tsv("1\tx\n2\n", Schema::parse("id:int,name:str")); });
  EXPECT_EQ(e.code(), ErrorCode::kArityMismatch);
  EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
}

TEST(TsvTest, RejectsTrailingGarbageInNumbers) {
  EXPECT_EQ(error_of([] { parse_tsv("12x\n", Schema::parse("a:int")); }).code(),
            ErrorCode::kParse);
  EXPECT_EQ(error_of([] { parse_tsv("1.5\n", Schema::parse("a:int")); }).code(),
            ErrorCode::kParse);
}

TEST(TsvTest, WriteThenParseRoundTrips) {
  const Schema s = Schema::parse("id:int,tag:str,w:float");
  Table t = parse_tsv("1\tC++\t0.1\n-7\tx y\t1e-300\n", s);
  std::ostringstream out;
  write_tsv(t, out);
  EXPECT_TRUE(cells_equal(parse_tsv(out.str(), s), t));
}

TEST(TsvTest, FileIo) {
  const auto path = std::filesystem::temp_directory_path() / "tablegraph_tsv_test.tsv";
  Table t = parse_tsv("3\t4\n", Schema::parse("a:int,b:int"));
  save_tsv(t, path);
  EXPECT_TRUE(cells_equal(load_tsv(path, t.schema()), t));
  std::filesystem::remove(path);
  EXPECT_EQ(error_of([&] { load_tsv(path, t.schema()); }).code(), ErrorCode::kIo);
}

}  // namespace
}  // namespace tablegraph
