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

#include "falk/os_algebra.h"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "falk/error.h"

namespace falk {

std::string_view TriangleKindName(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::kBalancedCycle:
      return "balanced_cycle";
    case TriangleKind::kD21:
      return "D21";
    case TriangleKind::kK22:
      return "K22";
  }
  return "unknown";
}

std::int64_t Choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

// Rank of at most three {-1,0,1} vectors by integer elimination.
int SmallRank(std::vector<std::vector<int>> rows) {
  int rank = 0;
  const size_t width = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < width && rank < static_cast<int>(rows.size());
       ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      const int a = rows[rank][col];
      const int b = rows[r][col];
      if (b == 0) continue;
      for (size_t c = 0; c < width; ++c) {
        rows[r][c] = a * rows[r][c] - b * rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

std::array<int, 3> Sorted(int a, int b, int c) {
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  return s;
}

// Triangles found from the edge patterns alone.
std::map<std::array<int, 3>, TriangleKind> PatternTriangles(
    const SignedGraph& g) {
  std::map<std::array<int, 3>, TriangleKind> out;
  const int ell = g.ell();
  for (int a = 1; a <= ell; ++a) {
    for (int b = a + 1; b <= ell; ++b) {
      const auto ab = g.pair_labels(a, b);
      for (int c = b + 1; c <= ell; ++c) {
        for (int x : ab) {
          for (int y : g.pair_labels(b, c)) {
            for (int z : g.pair_labels(a, c)) {
              const std::array<int, 3> cycle{x, y, z};
              if (CycleSign(g, cycle) == Sign::kPlus) {
                out.emplace(Sorted(x, y, z), TriangleKind::kBalancedCycle);
              }
            }
          }
        }
      }
      const auto la = g.loop_label(a);
      const auto lb = g.loop_label(b);
      if (ab.size() == 2) {
        for (const auto& loop : {la, lb}) {
          if (loop) out.emplace(Sorted(ab[0], ab[1], *loop), TriangleKind::kD21);
        }
      }
      if (la && lb) {
        for (int e : ab) out.emplace(Sorted(e, *la, *lb), TriangleKind::kK22);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Triangle> Triangles(const SignedGraph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> normals;
  normals.reserve(n);
  for (int k = 1; k <= n; ++k) normals.push_back(GetNormalVector(g, k).coeffs);

  const auto patterns = PatternTriangles(g);
  std::vector<Triangle> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (SmallRank({normals[i - 1], normals[j - 1], normals[k - 1]}) == 3) {
          continue;
        }
        const std::array<int, 3> s{i, j, k};
        auto it = patterns.find(s);
        if (it == patterns.end()) {
          throw FalkError(ErrorCode::kInternalKindMismatch,
                          "dependent triple {" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(k) +
                              "} matches no triangle pattern");
        }
        out.push_back({s, it->second});
      }
    }
  }
  if (out.size() != patterns.size()) {
    throw FalkError(ErrorCode::kInternalKindMismatch,
                    "a triangle pattern has independent normal vectors");
  }
  return out;
}

RankMatrix I32Matrix(const SignedGraph& g, const std::vector<Triangle>& tris) {
  RankMatrix m(3);
  for (const Triangle& t : tris) {
    const ExteriorVector d = Boundary(t.labels);
    for (int label = 1; label <= g.n(); ++label) m.AddRow(Wedge(label, d));
  }
  return m;
}

RankMatrix F3Matrix(const SignedGraph& g, const std::vector<Triangle>& tris) {
  RankMatrix m(3);
  for (const Triangle& t : tris) {
    const ExteriorVector d = Boundary(t.labels);
    for (int label = 1; label <= g.n(); ++label) {
      if (std::find(t.labels.begin(), t.labels.end(), label) !=
          t.labels.end()) {
        continue;
      }
      m.AddRow(Wedge(label, d));
    }
  }
  return m;
}

RankMatrix BoundaryMatrix(const std::vector<Triangle>& tris) {
  RankMatrix m(2);
  for (const Triangle& t : tris) m.AddRow(Boundary(t.labels));
  return m;
}

std::int64_t DimA2Exact(const SignedGraph& g, RankBackend backend) {
  return Choose(g.n(), 2) - Rank(BoundaryMatrix(Triangles(g)), backend);
}

std::int64_t DimA2(const SignedGraph& g, RankBackend backend) {
  if (ContainsB2(g)) {
    throw FalkError(ErrorCode::kB2Present,
                    "dim A^2 closed form needs a graph without B2");
  }
  const auto tris = Triangles(g);
  const std::int64_t closed =
      Choose(g.n(), 2) - static_cast<std::int64_t>(tris.size());
  const std::int64_t ranked =
      Choose(g.n(), 2) - Rank(BoundaryMatrix(tris), backend);
  if (closed != ranked) {
    throw FalkError(ErrorCode::kInternal,
                    "dim A^2: closed form " + std::to_string(closed) +
                        " but boundary rank gives " + std::to_string(ranked));
  }
  return closed;
}

std::int64_t RankI32(const SignedGraph& g, RankBackend backend) {
  return Rank(I32Matrix(g, Triangles(g)), backend);
}

std::int64_t DimSpanF3(const SignedGraph& g, RankBackend backend) {
  return Rank(F3Matrix(g, Triangles(g)), backend);
}

std::int64_t Phi3FromDims(std::int64_t n, std::int64_t dim_a2,
                          std::int64_t dim_i32) {
  return 2 * Choose(n + 1, 3) - n * dim_a2 + Choose(n, 3) - dim_i32;
}

std::int64_t Phi3Oracle(const SignedGraph& g, RankBackend backend) {
  const std::int64_t a2 = DimA2(g, backend);
  const std::int64_t phi = Phi3FromDims(g.n(), a2, RankI32(g, backend));
  if (phi < 0) {
    throw FalkError(ErrorCode::kInternal, "negative phi_3");
  }
  return phi;
}

std::int64_t Phi3OracleExact(const SignedGraph& g, RankBackend backend) {
  const auto tris = Triangles(g);
  const std::int64_t a2 =
      Choose(g.n(), 2) - Rank(BoundaryMatrix(tris), backend);
  const std::int64_t phi =
      Phi3FromDims(g.n(), a2, Rank(I32Matrix(g, tris), backend));
  if (phi < 0) {
    throw FalkError(ErrorCode::kInternal, "negative phi_3");
  }
  return phi;
}

}  // namespace falk
