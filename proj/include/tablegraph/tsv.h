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

#ifndef TABLEGRAPH_TSV_H_
#define TABLEGRAPH_TSV_H_

#include <filesystem>
#include <ostream>
#include <string_view>

#include "tablegraph/table.h"

namespace tablegraph {

// Tab-separated text: one row per line, no header, no quoting. A trailing
// newline after the last row is optional. Row ids are assigned 0..n-1 in
// line order.
Table parse_tsv(std::string_view text, const Schema& schema);
Table load_tsv(const std::filesystem::path& path, const Schema& schema);

// Floats are written in shortest round-trip form. Throws kInvalidArgument if
// a string cell contains a tab or newline.
void write_tsv(const Table& table, std::ostream& out);
void save_tsv(const Table& table, const std::filesystem::path& path);

}  // namespace tablegraph

#endif  // TABLEGRAPH_TSV_H_
