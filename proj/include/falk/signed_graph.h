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

#ifndef FALK_SIGNED_GRAPH_H_
#define FALK_SIGNED_GRAPH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace falk {

enum class Sign : std::int8_t { kPlus = 1, kMinus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPlus : Sign::kMinus;
}
constexpr Sign operator-(Sign s) {
  return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus;
}
char SignChar(Sign s);

enum class EdgeKind : std::uint8_t { kPositive, kNegative, kLoop };

// One hyperplane of the arrangement. For loops `j == i`. Non-loop edges are
// stored with i < j.
struct Edge {
  EdgeKind kind = EdgeKind::kPositive;
  int i = 0;
  int j = 0;

  static Edge Positive(int i, int j);
  static Edge Negative(int i, int j);
  static Edge Loop(int i);

  bool is_loop() const { return kind == EdgeKind::kLoop; }
  // Only meaningful for non-loop edges.
  Sign sign() const {
    return kind == EdgeKind::kNegative ? Sign::kMinus : Sign::kPlus;
  }
  // "+ 1 2", "- 1 2" or "o 1".
  std::string ToString() const;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Linear form of a hyperplane in the basis x_1..x_ell.
struct NormalVector {
  std::vector<int> coeffs;

  friend bool operator==(const NormalVector&, const NormalVector&) = default;
};

// Assignment of a sign to each vertex 1..ell; index 0 holds vertex 1.
class SwitchingFunction {
 public:
  explicit SwitchingFunction(std::vector<Sign> signs);
  static SwitchingFunction Identity(int ell);
  // Comma separated list such as "+,-,+". Accepts '-' and U+2212.
  static SwitchingFunction Parse(const std::string& text);

  int ell() const { return static_cast<int>(signs_.size()); }
  Sign operator()(int vertex) const { return signs_[vertex - 1]; }
  const std::vector<Sign>& signs() const { return signs_; }
  std::string ToString() const;

  friend bool operator==(const SwitchingFunction&,
                         const SwitchingFunction&) = default;

 private:
  std::vector<Sign> signs_;
};

// A signed graph on vertices 1..ell whose edges are the hyperplanes of the
// associated arrangement. Edge k (1-based, in insertion order) is hyperplane
// label k. Immutable once built.
class SignedGraph {
 public:
  class Builder {
   public:
    explicit Builder(int ell);

    // Validates and appends; the edge receives the next label.
    Builder& Add(const Edge& edge);
    Builder& AddPositive(int i, int j) { return Add(Edge::Positive(i, j)); }
    Builder& AddNegative(int i, int j) { return Add(Edge::Negative(i, j)); }
    Builder& AddLoop(int i) { return Add(Edge::Loop(i)); }

    SignedGraph Build() &&;
    SignedGraph Build() const&;

   private:
    int ell_;
    std::vector<Edge> edges_;
    // Label lookups, 0 when absent; pair tables are ell x ell row-major.
    std::vector<int> positive_;
    std::vector<int> negative_;
    std::vector<int> loop_;

    friend class SignedGraph;
  };

  // Throws DuplicateEdge, VertexOutOfRange or SelfPairEdge.
  static SignedGraph Build(int ell, std::span<const Edge> edges);

  int ell() const { return ell_; }
  int n() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  // Throws LabelOutOfRange.
  const Edge& edge(int label) const;

  std::optional<int> positive_label(int i, int j) const;
  std::optional<int> negative_label(int i, int j) const;
  std::optional<int> loop_label(int i) const;
  bool has_loop(int i) const { return loop_label(i).has_value(); }
  // Labels of all non-loop edges on {i, j}: positive first, then negative.
  std::vector<int> pair_labels(int i, int j) const;

  // Label sets of E^+, E^- and L.
  std::vector<int> positive_labels() const;
  std::vector<int> negative_labels() const;
  std::vector<int> loop_labels() const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.ell_ == b.ell_ && a.edges_ == b.edges_;
  }

 private:
  explicit SignedGraph(Builder builder);
  int pair_index(int i, int j) const;

  int ell_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> positive_;
  std::vector<int> negative_;
  std::vector<int> loop_;
};

// e_i - e_j, e_i + e_j or e_i. Throws LabelOutOfRange.
NormalVector GetNormalVector(const SignedGraph& g, int label);

// Product of edge signs along a closed walk of non-loop edges.
// Throws NotACycle when the labels do not close up or contain a loop.
Sign CycleSign(const SignedGraph& g, std::span<const int> labels);

// Multiplies the sign of every non-loop edge {i,j} by sigma(i) sigma(j).
// Loops are fixed. Labels are preserved positionally.
SignedGraph Switch(const SignedGraph& g, const SwitchingFunction& sigma);

// True when g1 and g2 share ell, the same single/double pairs and the same
// loops.
bool SameUnderlyingGraph(const SignedGraph& g1, const SignedGraph& g2);

// A switching function taking g1's signs to g2's, if one exists.
// Throws UnderlyingGraphMismatch.
std::optional<SwitchingFunction> FindSwitching(const SignedGraph& g1,
                                               const SignedGraph& g2);
bool IsSwitchingEquivalent(const SignedGraph& g1, const SignedGraph& g2);

// Ascending label sets {+ij, -ij, o_i, o_j} of every B2 in g.
std::vector<std::array<int, 4>> B2Witnesses(const SignedGraph& g);
bool ContainsB2(const SignedGraph& g);

}  // namespace falk

#endif  // FALK_SIGNED_GRAPH_H_
