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

// Command-line front end: run pipeline scripts, benchmark operations, and
// generate synthetic datasets.
//
// Exit status: 0 on success, 1 on an engine/operator error, 2 on bad usage.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tablegraph/bench.h"
#include "tablegraph/error.h"
#include "tablegraph/pipeline.h"
#include "tablegraph/synthetic.h"
#include "tablegraph/tsv.h"

namespace {

constexpr int kUsageError = 2;
constexpr int kOperatorError = 1;

}  // namespace

int main(int argc, char** argv) {
  using namespace tablegraph;

  CLI::App app{"tablegraph: in-memory tables, graphs and conversions between them"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned workers = default_workers();
  app.add_option("-w,--workers", workers, "Worker threads (default: logical cores)")
      ->check(CLI::PositiveNumber);

  auto* run = app.add_subcommand("run", "Execute a pipeline script");
  std::string script;
  run->add_option("script", script, "Script file")->required();

  auto* bench = app.add_subcommand("bench", "Benchmark one operation on an edge table");
  std::string dataset, op_name, schema = "src:int,dst:int";
  int reps = 5;
  std::uint64_t seed = 1;
  bench->add_option("dataset", dataset, "Edge table TSV")->required();
  bench->add_option("--op", op_name,
                    "pagerank|triangles|sssp|scc|kcore|select|join|to-graph|to-table")
      ->required();
  bench->add_option("--reps", reps, "Timed repetitions")->check(CLI::PositiveNumber);
  bench->add_option("--schema", schema, "Dataset schema; first two columns are the edge");
  bench->add_option("--seed", seed, "Seed for sssp source selection");

  auto* gen = app.add_subcommand("generate", "Write a synthetic dataset as TSV");
  std::string kind, out;
  std::int64_t nodes = 1000, edges = 5000, questions = 100, answers = 200, users = 0;
  gen->add_option("kind", kind, "random-edges | qa-forum")
      ->required()
      ->check(CLI::IsMember({"random-edges", "qa-forum"}));
  gen->add_option("-o,--out", out, "Output TSV path")->required();
  gen->add_option("--nodes", nodes, "random-edges: node id range")->check(CLI::NonNegativeNumber);
  gen->add_option("--edges", edges, "random-edges: rows")->check(CLI::NonNegativeNumber);
  gen->add_option("--questions", questions, "qa-forum: question rows")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--answers", answers, "qa-forum: answer rows")->check(CLI::NonNegativeNumber);
  gen->add_option("--users", users, "qa-forum: user count (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  set_default_workers(workers);
  try {
    if (*run) {
      return run_pipeline(script, std::cerr);
    }
    if (*bench) {
      auto op = parse_bench_op(op_name);
      if (!op) {
        std::cerr << "unknown bench op '" << op_name << "'\n";
        return kUsageError;
      }
      BenchOptions options;
      options.op = *op;
      options.repetitions = reps;
      options.workers = workers;
      options.seed = seed;
      BenchReport report = run_bench(dataset, options, schema);
      std::cout << report.to_tsv() << '\n';
      std::cerr << "# timed algorithm phase only; checksum=" << report.checksum << ' '
                << report.summary << '\n';
      return 0;
    }
    if (*gen) {
      if (kind == "random-edges") {
        save_tsv(random_edge_table(nodes, edges, seed), out);
      } else {
        QaForumParams params;
        params.questions = questions;
        params.answers = answers;
        params.users = users;
        params.seed = seed;
        save_tsv(qa_forum_table(params), out);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
    return kOperatorError;
  }
  return kUsageError;
}
