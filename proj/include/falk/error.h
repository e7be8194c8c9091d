// Copyright 2026 The Authors.
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

#ifndef FALK_ERROR_H_
#define FALK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace falk {

enum class ErrorCode {
  kDuplicateEdge,
  kVertexOutOfRange,
  kSelfPairEdge,
  kLabelOutOfRange,
  kNotACycle,
  kUnderlyingGraphMismatch,
  kB2Present,
  kInternalKindMismatch,
  kParseError,
  kInvalidArgument,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception.
class FalkError : public std::runtime_error {
 public:
  FalkError(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  // Message without the error-code prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace falk

#endif  // FALK_ERROR_H_
