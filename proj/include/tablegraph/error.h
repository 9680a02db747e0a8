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

#ifndef TABLEGRAPH_ERROR_H_
#define TABLEGRAPH_ERROR_H_

#include <stdexcept>
#include <string>

namespace tablegraph {

enum class ErrorCode {
  kIo,
  kParse,
  kArityMismatch,
  kUnknownColumn,
  kTypeMismatch,
  kSchemaMismatch,
  kInvalidArgument,
  kCapacityExhausted,
  kUnknownNode,
  kEmptyGraph,
  kCoverage,
  kUnknownObject,
};

const char* error_code_name(ErrorCode code);

// All engine failures surface as this exception; the code lets callers
// (and the CLI exit-status mapping) branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tablegraph

#endif  // TABLEGRAPH_ERROR_H_
