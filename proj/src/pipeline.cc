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

#include "tablegraph/pipeline.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "tablegraph/algorithms.h"
#include "tablegraph/convert.h"
#include "tablegraph/table_ops.h"
#include "tablegraph/tsv.h"

namespace tablegraph {
namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

Error usage(const std::string& message) {
  return Error(ErrorCode::kParse, message);
}

std::int64_t parse_int(const std::string& text, const char* what) {
  std::int64_t v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw usage(std::string(what) + " '" + text + "' is not an integer");
  }
  return v;
}

double parse_double(const std::string& text, const char* what) {
  double v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw usage(std::string(what) + " '" + text + "' is not a number");
  }
  return v;
}

AggFn parse_agg(const std::string& name) {
  for (AggFn fn : {AggFn::kCount, AggFn::kSum, AggFn::kMin, AggFn::kMax, AggFn::kMean}) {
    if (name == agg_fn_name(fn)) return fn;
  }
  throw usage("unknown aggregate '" + name + "'");
}

Table int_pairs_table(const std::string& key, const std::string& value,
                      std::span<const NodeId> ids, std::vector<std::int64_t> values) {
  std::vector<ColumnData> cols;
  cols.push_back(std::vector<std::int64_t>(ids.begin(), ids.end()));
  cols.push_back(std::move(values));
  std::vector<RowId> row_ids(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) row_ids[i] = static_cast<RowId>(i);
  return Table::from_columns(
      Schema{{key, ColumnType::kInt}, {value, ColumnType::kInt}}, std::move(cols),
      std::move(row_ids), nullptr, static_cast<RowId>(ids.size()));
}

class Interpreter {
 public:
  Interpreter(Workspace& ws, std::filesystem::path base) : ws_(ws), base_(std::move(base)) {}

  void run(const std::vector<std::string>& t) {
    const std::string& verb = t[0];
    if (verb == "load") {
      arity(t, 4, 4);
      ws_.put(t[1], load_tsv(path(t[2]), Schema::parse(t[3])));
    } else if (verb == "select") {
      arity(t, 4, 0);
      std::string text = t[3];
      for (std::size_t i = 4; i < t.size(); ++i) text += " " + t[i];
      if (t[1] == t[2]) {
        Table& table = ws_.mutable_table(t[2]);
        select_in_place(table, parse_predicate(text, table.schema()));
      } else {
        const Table& table = ws_.table(t[2]);
        ws_.put(t[1], select(table, parse_predicate(text, table.schema())));
      }
    } else if (verb == "join") {
      arity(t, 6, 6);
      ws_.put(t[1], join(ws_.table(t[2]), ws_.table(t[3]), t[4], t[5]));
    } else if (verb == "project") {
      arity(t, 4, 4);
      ws_.put(t[1], project(ws_.table(t[2]), split(t[3], ',')));
    } else if (verb == "group") {
      arity(t, 5, 5);
      std::vector<std::string> cols;
      if (t[3] != "-") cols = split(t[3], ',');
      std::vector<Aggregate> aggs;
      for (const auto& spec : split(t[4], ',')) {
        auto parts = split(spec, ':');
        if (parts.size() != 2) throw usage("aggregate '" + spec + "' is not fn:column");
        aggs.push_back({parse_agg(parts[0]), parts[1]});
      }
      ws_.put(t[1], group_aggregate(ws_.table(t[2]), cols, aggs));
    } else if (verb == "order") {
      arity(t, 4, 5);
      bool ascending = true;
      if (t.size() == 5) {
        if (t[4] != "asc" && t[4] != "desc") throw usage("order direction must be asc or desc");
        ascending = t[4] == "asc";
      }
      ws_.put(t[1], order(ws_.table(t[2]), split(t[3], ','), ascending));
    } else if (verb == "simjoin") {
      arity(t, 7, 7);
      std::vector<ColumnPair> pairs;
      for (const auto& spec : split(t[4], ',')) {
        auto parts = split(spec, ':');
        if (parts.size() != 2) throw usage("column pair '" + spec + "' is not left:right");
        pairs.push_back({parts[0], parts[1]});
      }
      Metric metric;
      if (t[5] == "L1") {
        metric = Metric::kL1;
      } else if (t[5] == "L2") {
        metric = Metric::kL2;
      } else {
        throw usage("metric must be L1 or L2");
      }
      ws_.put(t[1], sim_join(ws_.table(t[2]), ws_.table(t[3]), pairs, metric,
                             parse_double(t[6], "threshold")));
    } else if (verb == "nextk") {
      arity(t, 6, 6);
      ws_.put(t[1], next_k(ws_.table(t[2]), t[3], t[4], parse_int(t[5], "k")));
    } else if (verb == "tograph") {
      arity(t, 5, 5);
      ws_.put(t[1], table_to_graph(ws_.table(t[2]), EdgeSpec{t[3], t[4]}));
    } else if (verb == "totable") {
      arity(t, 3, 4);
      const std::string kind = t.size() == 4 ? t[3] : "edges";
      if (kind == "edges") {
        ws_.put(t[1], graph_to_edge_table(ws_.graph(t[2])));
      } else if (kind == "nodes") {
        ws_.put(t[1], graph_to_node_table(ws_.graph(t[2])));
      } else {
        throw usage("totable kind must be edges or nodes");
      }
    } else if (verb == "pagerank") {
      arity(t, 3, 7);
      PageRankOptions opts;
      std::string key = "node", value = "score";
      for (std::size_t i = 3; i < t.size(); ++i) {
        const auto eq = t[i].find('=');
        if (eq == std::string::npos) throw usage("expected name=value, got '" + t[i] + "'");
        const std::string name = t[i].substr(0, eq), arg = t[i].substr(eq + 1);
        if (name == "key") {
          key = arg;
        } else if (name == "value") {
          value = arg;
        } else if (name == "damping") {
          opts.damping = parse_double(arg, "damping");
        } else if (name == "iterations") {
          opts.iterations = static_cast<int>(parse_int(arg, "iterations"));
        } else {
          throw usage("unknown pagerank option '" + name + "'");
        }
      }
      ws_.put(t[1], table_from_map(pagerank(ws_.graph(t[2]), opts), key, value));
    } else if (verb == "triangles") {
      arity(t, 3, 3);
      Table out(Schema{{"triangles", ColumnType::kInt}});
      out.append_row({static_cast<std::int64_t>(triangle_count(ws_.graph(t[2])))});
      ws_.put(t[1], std::move(out));
    } else if (verb == "sssp") {
      arity(t, 4, 4);
      auto dist = sssp(ws_.graph(t[2]), parse_int(t[3], "source"));
      std::vector<std::int64_t> hops(dist.size());
      for (std::size_t i = 0; i < hops.size(); ++i) {
        const auto d = dist.values()[i];
        hops[i] = d == kUnreachable ? -1 : static_cast<std::int64_t>(d);
      }
      ws_.put(t[1], int_pairs_table("node", "distance", dist.ids(), std::move(hops)));
    } else if (verb == "scc") {
      arity(t, 3, 3);
      auto labels = scc(ws_.graph(t[2]));
      ws_.put(t[1], int_pairs_table("node", "component", labels.ids(),
                                    {labels.values().begin(), labels.values().end()}));
    } else if (verb == "kcore") {
      arity(t, 4, 4);
      ws_.put(t[1], k_core(ws_.graph(t[2]), parse_int(t[3], "k")));
    } else if (verb == "save") {
      arity(t, 3, 3);
      const auto& obj = ws_.get(t[1]);
      if (const auto* table = std::get_if<Table>(&obj)) {
        save_tsv(*table, path(t[2]));
      } else {
        save_tsv(graph_to_edge_table(std::get<Graph>(obj)), path(t[2]));
      }
    } else {
      throw usage("unknown command '" + verb + "'");
    }
  }

 private:
  // max_args == 0 means unbounded.
  static void arity(const std::vector<std::string>& t, std::size_t min_args,
                    std::size_t max_args) {
    if (t.size() < min_args || (max_args != 0 && t.size() > max_args)) {
      throw usage("wrong number of arguments for '" + t[0] + "'");
    }
  }

  std::filesystem::path path(const std::string& p) const {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base_ / fp;
  }

  Workspace& ws_;
  std::filesystem::path base_;
};

}  // namespace

void Workspace::put(const std::string& name, Object object) {
  objects_.insert_or_assign(name, std::move(object));
}

const Workspace::Object& Workspace::get(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) {
    throw Error(ErrorCode::kUnknownObject, "undefined object '" + name + "'");
  }
  return it->second;
}

const Table& Workspace::table(const std::string& name) const {
  const auto* t = std::get_if<Table>(&get(name));
  if (t == nullptr) throw Error(ErrorCode::kTypeMismatch, "'" + name + "' is a graph, not a table");
  return *t;
}

Table& Workspace::mutable_table(const std::string& name) {
  return const_cast<Table&>(table(name));
}

const Graph& Workspace::graph(const std::string& name) const {
  const auto* g = std::get_if<Graph>(&get(name));
  if (g == nullptr) throw Error(ErrorCode::kTypeMismatch, "'" + name + "' is a table, not a graph");
  return *g;
}

void execute_script(std::string_view script, Workspace& workspace,
                    const std::filesystem::path& base_dir) {
  Interpreter interp(workspace, base_dir);
  std::size_t line_no = 0;
  for (const std::string& raw : split(script, '\n')) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    try {
      interp.run(tokens);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

int run_pipeline(const std::filesystem::path& script, std::ostream& diagnostics) {
  std::ifstream in(script, std::ios::binary);
  if (!in) {
    diagnostics << script.string() << ": cannot open script\n";
    return 1;
  }
  std::ostringstream text;
  text << in.rdbuf();
  Workspace workspace;
  try {
    execute_script(text.str(), workspace, script.parent_path());
  } catch (const Error& e) {
    diagnostics << script.string() << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tablegraph
