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

#ifndef FALK_GRAPH_IO_H_
#define FALK_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "falk/signed_graph.h"

namespace falk {

// Line-oriented graph format. '#' starts a comment; blank lines are ignored.
// The first directive is `vertices <ell>`, followed by one edge per line in
// label order: `+ i j`, `- i j` or `o i`.
//
// Throws ParseError (message starts with "line N:") for malformed text and
// rethrows graph construction errors with the offending line prefixed.
SignedGraph ParseGraph(std::string_view text);
SignedGraph LoadGraphFile(const std::string& path);

// Inverse of ParseGraph, without comments.
std::string SerializeGraph(const SignedGraph& g);

}  // namespace falk

#endif  // FALK_GRAPH_IO_H_
