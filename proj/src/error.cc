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

#include "falk/error.h"

#include <string>

namespace falk {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge:
      return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange:
      return "VertexOutOfRange";
    case ErrorCode::kSelfPairEdge:
      return "SelfPairEdge";
    case ErrorCode::kLabelOutOfRange:
      return "LabelOutOfRange";
    case ErrorCode::kNotACycle:
      return "NotACycle";
    case ErrorCode::kUnderlyingGraphMismatch:
      return "UnderlyingGraphMismatch";
    case ErrorCode::kB2Present:
      return "B2Present";
    case ErrorCode::kInternalKindMismatch:
      return "InternalKindMismatch";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

FalkError::FalkError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace falk
