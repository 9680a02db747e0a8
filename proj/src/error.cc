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

#include "tablegraph/error.h"

#include <thread>

#include "tablegraph/parallel.h"

namespace tablegraph {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kArityMismatch: return "arity-mismatch";
    case ErrorCode::kUnknownColumn: return "unknown-column";
    case ErrorCode::kTypeMismatch: return "type-mismatch";
    case ErrorCode::kSchemaMismatch: return "schema-mismatch";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kCapacityExhausted: return "capacity-exhausted";
    case ErrorCode::kUnknownNode: return "unknown-node";
    case ErrorCode::kEmptyGraph: return "empty-graph";
    case ErrorCode::kCoverage: return "coverage";
    case ErrorCode::kUnknownObject: return "unknown-object";
  }
  return "unknown";
}

namespace {
unsigned g_default_workers = 0;
}

unsigned default_workers() {
  if (g_default_workers != 0) return g_default_workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void set_default_workers(unsigned workers) { g_default_workers = workers; }

}  // namespace tablegraph
