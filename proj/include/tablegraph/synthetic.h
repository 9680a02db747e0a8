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

#ifndef TABLEGRAPH_SYNTHETIC_H_
#define TABLEGRAPH_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>

#include "tablegraph/table.h"

namespace tablegraph {

// `edges` rows (src:int, dst:int) with endpoints uniform in [0, nodes).
// Same seed, same table on every platform.
Table random_edge_table(std::int64_t nodes, std::int64_t edges, std::uint64_t seed);

struct QaForumParams {
  std::int64_t questions = 100;
  std::int64_t answers = 200;
  std::int64_t users = 0;  // 0 picks max(1, (questions + answers) / 5)
  std::uint64_t seed = 1;
};

// PostId:int, Type:str, Tag:str, UserId:int, AnswerId:int
Schema qa_forum_schema();

// Question rows come first (PostId 0..Q-1), then answers. A question's
// AnswerId is the PostId of its accepted answer, or -1; an answer's AnswerId
// is always -1. Answers carry their question's tag and favor low user ids,
// so a few users account for most accepted answers.
Table qa_forum_table(const QaForumParams& params);

}  // namespace tablegraph

#endif  // TABLEGRAPH_SYNTHETIC_H_
