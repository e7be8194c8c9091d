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

#include "falk/signed_graph.h"

#include <algorithm>
#include <queue>
#include <sstream>
#include <string>
#include <utility>

#include "falk/error.h"

namespace falk {

char SignChar(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

Edge Edge::Positive(int i, int j) {
  return {EdgeKind::kPositive, std::min(i, j), std::max(i, j)};
}

Edge Edge::Negative(int i, int j) {
  return {EdgeKind::kNegative, std::min(i, j), std::max(i, j)};
}

Edge Edge::Loop(int i) { return {EdgeKind::kLoop, i, i}; }

std::string Edge::ToString() const {
  std::ostringstream out;
  switch (kind) {
    case EdgeKind::kPositive:
      out << "+ " << i << ' ' << j;
      break;
    case EdgeKind::kNegative:
      out << "- " << i << ' ' << j;
      break;
    case EdgeKind::kLoop:
      out << "o " << i;
      break;
  }
  return out.str();
}

SwitchingFunction::SwitchingFunction(std::vector<Sign> signs)
    : signs_(std::move(signs)) {}

SwitchingFunction SwitchingFunction::Identity(int ell) {
  return SwitchingFunction(std::vector<Sign>(ell, Sign::kPlus));
}

SwitchingFunction SwitchingFunction::Parse(const std::string& text) {
  std::vector<Sign> signs;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token == "+" || token == "+1" || token == "1") {
      signs.push_back(Sign::kPlus);
    } else if (token == "-" || token == "-1" || token == "−") {
      signs.push_back(Sign::kMinus);
    } else {
      throw FalkError(ErrorCode::kInvalidArgument,
                      "bad switching sign '" + token + "'");
    }
  }
  return SwitchingFunction(std::move(signs));
}

std::string SwitchingFunction::ToString() const {
  std::string out;
  for (size_t k = 0; k < signs_.size(); ++k) {
    if (k > 0) out += ',';
    out += SignChar(signs_[k]);
  }
  return out;
}

SignedGraph::Builder::Builder(int ell)
    : ell_(ell),
      positive_(static_cast<size_t>(std::max(ell, 0)) * std::max(ell, 0), 0),
      negative_(positive_.size(), 0),
      loop_(std::max(ell, 0), 0) {
  if (ell < 0) {
    throw FalkError(ErrorCode::kInvalidArgument, "negative vertex count");
  }
}

SignedGraph::Builder& SignedGraph::Builder::Add(const Edge& edge) {
  auto in_range = [this](int v) { return v >= 1 && v <= ell_; };
  if (!in_range(edge.i) || !in_range(edge.j)) {
    throw FalkError(ErrorCode::kVertexOutOfRange,
                    "edge '" + edge.ToString() + "' outside [1," +
                        std::to_string(ell_) + "]");
  }
  const int label = static_cast<int>(edges_.size()) + 1;
  if (edge.is_loop()) {
    if (edge.i != edge.j) {
      throw FalkError(ErrorCode::kInvalidArgument, "malformed loop");
    }
    int& slot = loop_[edge.i - 1];
    if (slot != 0) {
      throw FalkError(ErrorCode::kDuplicateEdge,
                      "duplicate loop at vertex " + std::to_string(edge.i));
    }
    slot = label;
  } else {
    if (edge.i == edge.j) {
      throw FalkError(ErrorCode::kSelfPairEdge,
                      "edge '" + edge.ToString() + "' joins a vertex to itself");
    }
    const int lo = std::min(edge.i, edge.j);
    const int hi = std::max(edge.i, edge.j);
    auto& table = edge.kind == EdgeKind::kPositive ? positive_ : negative_;
    int& slot = table[static_cast<size_t>(lo - 1) * ell_ + (hi - 1)];
    if (slot != 0) {
      throw FalkError(ErrorCode::kDuplicateEdge,
                      "duplicate edge '" + edge.ToString() + "'");
    }
    slot = label;
  }
  Edge stored = edge;
  if (!stored.is_loop()) {
    stored.i = std::min(edge.i, edge.j);
    stored.j = std::max(edge.i, edge.j);
  }
  edges_.push_back(stored);
  return *this;
}

SignedGraph SignedGraph::Builder::Build() && {
  return SignedGraph(std::move(*this));
}

SignedGraph SignedGraph::Builder::Build() const& { return SignedGraph(*this); }

SignedGraph::SignedGraph(Builder builder)
    : ell_(builder.ell_),
      edges_(std::move(builder.edges_)),
      positive_(std::move(builder.positive_)),
      negative_(std::move(builder.negative_)),
      loop_(std::move(builder.loop_)) {}

SignedGraph SignedGraph::Build(int ell, std::span<const Edge> edges) {
  Builder builder(ell);
  for (const Edge& e : edges) builder.Add(e);
  return std::move(builder).Build();
}

const Edge& SignedGraph::edge(int label) const {
  if (label < 1 || label > n()) {
    throw FalkError(ErrorCode::kLabelOutOfRange,
                    "label " + std::to_string(label) + " outside [1," +
                        std::to_string(n()) + "]");
  }
  return edges_[label - 1];
}

int SignedGraph::pair_index(int i, int j) const {
  if (i < 1 || j < 1 || i > ell_ || j > ell_ || i == j) return -1;
  if (i > j) std::swap(i, j);
  return (i - 1) * ell_ + (j - 1);
}

std::optional<int> SignedGraph::positive_label(int i, int j) const {
  const int k = pair_index(i, j);
  if (k < 0 || positive_[k] == 0) return std::nullopt;
  return positive_[k];
}

std::optional<int> SignedGraph::negative_label(int i, int j) const {
  const int k = pair_index(i, j);
  if (k < 0 || negative_[k] == 0) return std::nullopt;
  return negative_[k];
}

std::optional<int> SignedGraph::loop_label(int i) const {
  if (i < 1 || i > ell_ || loop_[i - 1] == 0) return std::nullopt;
  return loop_[i - 1];
}

std::vector<int> SignedGraph::pair_labels(int i, int j) const {
  std::vector<int> out;
  if (auto p = positive_label(i, j)) out.push_back(*p);
  if (auto m = negative_label(i, j)) out.push_back(*m);
  return out;
}

namespace {

std::vector<int> LabelsOfKind(const std::vector<Edge>& edges, EdgeKind kind) {
  std::vector<int> out;
  for (size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].kind == kind) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

}  // namespace

std::vector<int> SignedGraph::positive_labels() const {
  return LabelsOfKind(edges_, EdgeKind::kPositive);
}
std::vector<int> SignedGraph::negative_labels() const {
  return LabelsOfKind(edges_, EdgeKind::kNegative);
}
std::vector<int> SignedGraph::loop_labels() const {
  return LabelsOfKind(edges_, EdgeKind::kLoop);
}

NormalVector GetNormalVector(const SignedGraph& g, int label) {
  const Edge& e = g.edge(label);
  NormalVector v{std::vector<int>(g.ell(), 0)};
  v.coeffs[e.i - 1] = 1;
  switch (e.kind) {
    case EdgeKind::kPositive:
      v.coeffs[e.j - 1] = -1;
      break;
    case EdgeKind::kNegative:
      v.coeffs[e.j - 1] = 1;
      break;
    case EdgeKind::kLoop:
      break;
  }
  return v;
}

Sign CycleSign(const SignedGraph& g, std::span<const int> labels) {
  if (labels.empty()) {
    throw FalkError(ErrorCode::kNotACycle, "empty edge sequence");
  }
  Sign product = Sign::kPlus;
  for (int label : labels) {
    const Edge& e = g.edge(label);
    if (e.is_loop()) {
      throw FalkError(ErrorCode::kNotACycle,
                      "label " + std::to_string(label) + " is a loop");
    }
    product = product * e.sign();
  }
  // Try both orientations of the first edge.
  const Edge& first = g.edge(labels.front());
  for (int start : {first.i, first.j}) {
    int at = start;
    bool ok = true;
    for (int label : labels) {
      const Edge& e = g.edge(label);
      if (e.i == at) {
        at = e.j;
      } else if (e.j == at) {
        at = e.i;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && at == start) return product;
  }
  throw FalkError(ErrorCode::kNotACycle, "edges do not form a closed walk");
}

SignedGraph Switch(const SignedGraph& g, const SwitchingFunction& sigma) {
  if (sigma.ell() != g.ell()) {
    throw FalkError(ErrorCode::kInvalidArgument,
                    "switching function has " + std::to_string(sigma.ell()) +
                        " signs for " + std::to_string(g.ell()) + " vertices");
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (e.is_loop()) continue;
    if (sigma(e.i) * sigma(e.j) == Sign::kMinus) {
      e.kind = e.kind == EdgeKind::kPositive ? EdgeKind::kNegative
                                             : EdgeKind::kPositive;
    }
  }
  return SignedGraph::Build(g.ell(), edges);
}

bool SameUnderlyingGraph(const SignedGraph& g1, const SignedGraph& g2) {
  if (g1.ell() != g2.ell() || g1.n() != g2.n()) return false;
  for (int i = 1; i <= g1.ell(); ++i) {
    if (g1.has_loop(i) != g2.has_loop(i)) return false;
    for (int j = i + 1; j <= g1.ell(); ++j) {
      if (g1.pair_labels(i, j).size() != g2.pair_labels(i, j).size()) {
        return false;
      }
    }
  }
  return true;
}

std::optional<SwitchingFunction> FindSwitching(const SignedGraph& g1,
                                               const SignedGraph& g2) {
  if (!SameUnderlyingGraph(g1, g2)) {
    throw FalkError(ErrorCode::kUnderlyingGraphMismatch,
                    "graphs do not share an underlying graph");
  }
  const int ell = g1.ell();
  // Constraint sigma(i) sigma(j) = sgn1(ij) sgn2(ij) on every single-edge
  // pair; double pairs are fixed by every switching.
  std::vector<std::vector<std::pair<int, Sign>>> adj(ell + 1);
  for (int i = 1; i <= ell; ++i) {
    for (int j = i + 1; j <= ell; ++j) {
      const auto p1 = g1.pair_labels(i, j);
      if (p1.size() != 1) continue;
      const auto p2 = g2.pair_labels(i, j);
      const Sign rel = g1.edge(p1[0]).sign() * g2.edge(p2[0]).sign();
      adj[i].emplace_back(j, rel);
      adj[j].emplace_back(i, rel);
    }
  }
  std::vector<std::optional<Sign>> sigma(ell + 1);
  for (int root = 1; root <= ell; ++root) {
    if (sigma[root]) continue;
    sigma[root] = Sign::kPlus;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (const auto& [v, rel] : adj[u]) {
        const Sign want = *sigma[u] * rel;
        if (!sigma[v]) {
          sigma[v] = want;
          frontier.push(v);
        } else if (*sigma[v] != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Sign> signs;
  signs.reserve(ell);
  for (int v = 1; v <= ell; ++v) signs.push_back(*sigma[v]);
  return SwitchingFunction(std::move(signs));
}

bool IsSwitchingEquivalent(const SignedGraph& g1, const SignedGraph& g2) {
  return FindSwitching(g1, g2).has_value();
}

std::vector<std::array<int, 4>> B2Witnesses(const SignedGraph& g) {
  std::vector<std::array<int, 4>> out;
  for (int i = 1; i <= g.ell(); ++i) {
    const auto li = g.loop_label(i);
    if (!li) continue;
    for (int j = i + 1; j <= g.ell(); ++j) {
      const auto lj = g.loop_label(j);
      const auto p = g.positive_label(i, j);
      const auto m = g.negative_label(i, j);
      if (!lj || !p || !m) continue;
      std::array<int, 4> w{*p, *m, *li, *lj};
      std::sort(w.begin(), w.end());
      out.push_back(w);
    }
  }
  return out;
}

bool ContainsB2(const SignedGraph& g) { return !B2Witnesses(g).empty(); }

}  // namespace falk
