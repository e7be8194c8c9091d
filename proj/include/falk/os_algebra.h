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

#ifndef FALK_OS_ALGEBRA_H_
#define FALK_OS_ALGEBRA_H_

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "falk/exterior.h"
#include "falk/rank.h"
#include "falk/signed_graph.h"

namespace falk {

enum class TriangleKind {
  kBalancedCycle,  // balanced 3-cycle
  kD21,            // {+ij, -ij, loop at i or j}
  kK22,            // {an edge ij, loop i, loop j}
};

std::string_view TriangleKindName(TriangleKind kind);

// A dependent 3-subset of hyperplane labels.
struct Triangle {
  std::array<int, 3> labels;  // ascending
  TriangleKind kind;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// Binomial coefficient; 0 when k < 0 or k > n.
std::int64_t Choose(std::int64_t n, std::int64_t k);

// Every dependent 3-subset, ascending by labels. Dependence is decided by the
// rank of the normal vectors and cross-checked against the combinatorial
// patterns; a disagreement throws InternalKindMismatch.
std::vector<Triangle> Triangles(const SignedGraph& g);

// e_t ^ d e_T for every triangle T and every label t (t in T included).
RankMatrix I32Matrix(const SignedGraph& g, const std::vector<Triangle>& tris);
// Only the rows with t outside T.
RankMatrix F3Matrix(const SignedGraph& g, const std::vector<Triangle>& tris);
// d e_T for every triangle.
RankMatrix BoundaryMatrix(const std::vector<Triangle>& tris);

// C(n,2) - #triangles, confirmed against the rank of the boundary rows.
// Throws B2Present.
std::int64_t DimA2(const SignedGraph& g,
                   RankBackend backend = RankBackend::kExact);
// C(n,2) - rank of the boundary rows; valid for every signed graph.
std::int64_t DimA2Exact(const SignedGraph& g,
                        RankBackend backend = RankBackend::kExact);

std::int64_t RankI32(const SignedGraph& g,
                     RankBackend backend = RankBackend::kExact);
std::int64_t DimSpanF3(const SignedGraph& g,
                       RankBackend backend = RankBackend::kExact);

// 2 C(n+1,3) - n dim A^2 + C(n,3) - dim I_2^3.
std::int64_t Phi3FromDims(std::int64_t n, std::int64_t dim_a2,
                          std::int64_t dim_i32);

// Falk's formula with the closed-form dim A^2. Throws B2Present.
std::int64_t Phi3Oracle(const SignedGraph& g,
                        RankBackend backend = RankBackend::kExact);
// Falk's formula with dim A^2 from exact rank; any signed graph.
std::int64_t Phi3OracleExact(const SignedGraph& g,
                             RankBackend backend = RankBackend::kExact);

}  // namespace falk

#endif  // FALK_OS_ALGEBRA_H_
