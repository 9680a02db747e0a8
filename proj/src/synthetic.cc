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

#include "tablegraph/synthetic.h"

#include <algorithm>
#include <array>
#include <random>
#include <string>

namespace tablegraph {
namespace {

// mt19937_64 output is fixed by the standard; reduce by modulo instead of
// using the implementation-defined distributions.
std::int64_t uniform(std::mt19937_64& rng, std::int64_t bound) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bound));
}

constexpr std::array<const char*, 6> kTags = {"Java", "Python", "C++",
                                              "JavaScript", "SQL", "Go"};

}  // namespace

Table random_edge_table(std::int64_t nodes, std::int64_t edges, std::uint64_t seed) {
  if (nodes < 0 || edges < 0 || (nodes == 0 && edges > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "random edges need nodes >= 1 when edges > 0");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> src(static_cast<std::size_t>(edges));
  std::vector<std::int64_t> dst(static_cast<std::size_t>(edges));
  for (std::size_t i = 0; i < src.size(); ++i) {
    src[i] = uniform(rng, nodes);
    dst[i] = uniform(rng, nodes);
  }
  std::vector<RowId> ids(src.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<RowId>(i);
  std::vector<ColumnData> cols;
  cols.push_back(std::move(src));
  cols.push_back(std::move(dst));
  return Table::from_columns(
      Schema{{"src", ColumnType::kInt}, {"dst", ColumnType::kInt}},
      std::move(cols), std::move(ids), nullptr, edges);
}

Schema qa_forum_schema() {
  return Schema{{"PostId", ColumnType::kInt},
                {"Type", ColumnType::kString},
                {"Tag", ColumnType::kString},
                {"UserId", ColumnType::kInt},
                {"AnswerId", ColumnType::kInt}};
}

Table qa_forum_table(const QaForumParams& params) {
  if (params.questions < 0 || params.answers < 0 ||
      (params.questions == 0 && params.answers > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "qa-forum answers need at least one question");
  }
  const std::int64_t users =
      params.users > 0 ? params.users
                       : std::max<std::int64_t>(1, (params.questions + params.answers) / 5);
  std::mt19937_64 rng(params.seed);

  struct Question {
    std::int64_t user;
    std::size_t tag;
    std::int64_t accepted = -1;
  };
  std::vector<Question> questions(static_cast<std::size_t>(params.questions));
  for (auto& q : questions) {
    q.user = uniform(rng, users);
    q.tag = static_cast<std::size_t>(uniform(rng, kTags.size()));
  }
  struct Answer {
    std::int64_t question;
    std::int64_t user;
  };
  std::vector<Answer> answers(static_cast<std::size_t>(params.answers));
  for (std::size_t a = 0; a < answers.size(); ++a) {
    answers[a].question = uniform(rng, params.questions);
    // min of two uniforms skews toward low ids.
    answers[a].user = std::min(uniform(rng, users), uniform(rng, users));
    Question& q = questions[static_cast<std::size_t>(answers[a].question)];
    const std::int64_t post_id = params.questions + static_cast<std::int64_t>(a);
    // First answer is accepted with probability 3/4; later ones may replace it.
    if ((q.accepted < 0 && uniform(rng, 4) != 0) || uniform(rng, 8) == 0) {
      q.accepted = post_id;
    }
  }

  Table table(qa_forum_schema());
  table.reserve(questions.size() + answers.size());
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const Question& q = questions[i];
    table.append_row({static_cast<std::int64_t>(i), std::string("question"),
                      std::string(kTags[q.tag]), q.user, q.accepted});
  }
  for (std::size_t a = 0; a < answers.size(); ++a) {
    const Answer& ans = answers[a];
    const Question& q = questions[static_cast<std::size_t>(ans.question)];
    table.append_row({params.questions + static_cast<std::int64_t>(a),
                      std::string("answer"), std::string(kTags[q.tag]), ans.user,
                      std::int64_t{-1}});
  }
  return table;
}

}  // namespace tablegraph
