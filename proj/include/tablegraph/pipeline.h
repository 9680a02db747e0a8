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

#ifndef TABLEGRAPH_PIPELINE_H_
#define TABLEGRAPH_PIPELINE_H_

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "tablegraph/graph.h"
#include "tablegraph/table.h"

namespace tablegraph {

// Named tables and graphs produced by a script.
class Workspace {
 public:
  using Object = std::variant<Table, Graph>;

  void put(const std::string& name, Object object);
  bool contains(const std::string& name) const { return objects_.contains(name); }
  // Throw kUnknownObject if absent, kTypeMismatch if the kind differs.
  const Table& table(const std::string& name) const;
  Table& mutable_table(const std::string& name);
  const Graph& graph(const std::string& name) const;
  const Object& get(const std::string& name) const;

 private:
  std::map<std::string, Object, std::less<>> objects_;
};

/// Executes a line-oriented script against `workspace`. One command per
/// line, whitespace-separated; lines starting with `#` are comments. Relative paths resolve
/// against `base_dir`.
///
///   load     <out> <path> <schema>          e.g. id:int,tag:str
///   select   <out> <table> <predicate>      in place when out == table
///   join     <out> <left> <right> <left_col> <right_col>
///   project  <out> <table> <col,col,...>
///   group    <out> <table> <cols|-> <fn:col,...>   fn: count sum min max mean
///   order    <out> <table> <col,col,...> [asc|desc]
///   simjoin  <out> <left> <right> <lcol:rcol,...> <L1|L2> <threshold>
///   nextk    <out> <table> <group_col> <order_col> <k>
///   tograph  <out> <table> <src_col> <dst_col>
///   totable  <out> <graph> [edges|nodes]
///   pagerank <out> <graph> [key=node] [value=score] [damping=0.85] [iterations=10]
///   triangles <out> <graph>
///   sssp     <out> <graph> <source>
///   scc      <out> <graph>
///   kcore    <out> <graph> <k>
///   save     <name> <path>                  graphs are saved as edge tables
///
/// Throws Error with the message prefixed by "line N: " on the first failure.
void execute_script(std::string_view script, Workspace& workspace,
                    const std::filesystem::path& base_dir);

// Runs a script file. Returns 0 on success; on failure prints
// "<path>: line <N>: <message>" to `diagnostics` and returns 1.
int run_pipeline(const std::filesystem::path& script, std::ostream& diagnostics);

}  // namespace tablegraph

#endif  // TABLEGRAPH_PIPELINE_H_
