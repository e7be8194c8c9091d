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

#include "falk/graph_io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "falk/error.h"

namespace falk {

namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' ||
                               line[k] == '\r')) {
      ++k;
    }
    const size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' &&
           line[k] != '\r') {
      ++k;
    }
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

[[noreturn]] void Fail(int line, const std::string& message) {
  throw FalkError(ErrorCode::kParseError,
                  "line " + std::to_string(line) + ": " + message);
}

int ParseInt(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    Fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

SignedGraph ParseGraph(std::string_view text) {
  std::optional<SignedGraph::Builder> builder;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = Tokens(line);
    if (tok.empty()) continue;

    if (!builder) {
      if (tok[0] != "vertices" || tok.size() != 2) {
        Fail(line_no, "expected 'vertices <count>'");
      }
      const int ell = ParseInt(tok[1], line_no);
      if (ell < 0) Fail(line_no, "vertex count must be non-negative");
      builder.emplace(ell);
      continue;
    }
    Edge edge;
    if (tok[0] == "+" || tok[0] == "-") {
      if (tok.size() != 3) Fail(line_no, "edge line needs two vertices");
      const int i = ParseInt(tok[1], line_no);
      const int j = ParseInt(tok[2], line_no);
      edge = {tok[0] == "+" ? EdgeKind::kPositive : EdgeKind::kNegative, i, j};
    } else if (tok[0] == "o") {
      if (tok.size() != 2) Fail(line_no, "loop line needs one vertex");
      edge = Edge::Loop(ParseInt(tok[1], line_no));
    } else if (tok[0] == "vertices") {
      Fail(line_no, "repeated 'vertices' directive");
    } else {
      Fail(line_no, "unknown directive '" + std::string(tok[0]) + "'");
    }
    try {
      builder->Add(edge);
    } catch (const FalkError& e) {
      throw FalkError(e.code(),
                      "line " + std::to_string(line_no) + ": " + e.detail());
    }
  }
  if (!builder) Fail(line_no, "missing 'vertices' directive");
  return std::move(*builder).Build();
}

SignedGraph LoadGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FalkError(ErrorCode::kInvalidArgument, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGraph(buf.str());
}

std::string SerializeGraph(const SignedGraph& g) {
  std::string out = "vertices " + std::to_string(g.ell()) + "\n";
  for (const Edge& e : g.edges()) {
    out += e.ToString();
    out += '\n';
  }
  return out;
}

}  // namespace falk
