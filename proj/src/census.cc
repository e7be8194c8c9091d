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

#include "falk/census.h"

#include <array>
#include <sstream>
#include <vector>

#include "falk/error.h"

namespace falk {

std::string ToString(const Census& c) {
  std::ostringstream out;
  out << "(k3=" << c.k3 << ", k4=" << c.k4 << ", d3=" << c.d3
      << ", d21=" << c.d21 << ", k22=" << c.k22 << ", k33=" << c.k33
      << ", g_circ=" << c.g_circ << ", d31=" << c.d31 << ")";
  return out.str();
}

namespace {

void RequireNoB2(const SignedGraph& g, const char* what) {
  if (ContainsB2(g)) {
    throw FalkError(ErrorCode::kB2Present,
                    std::string(what) + " needs a graph without B2");
  }
}

// Signs available on the pair {a, b}.
std::vector<Sign> PairSigns(const SignedGraph& g, int a, int b) {
  std::vector<Sign> out;
  if (g.positive_label(a, b)) out.push_back(Sign::kPlus);
  if (g.negative_label(a, b)) out.push_back(Sign::kMinus);
  return out;
}

int Multiplicity(const SignedGraph& g, int a, int b) {
  return static_cast<int>(g.positive_label(a, b).has_value()) +
         static_cast<int>(g.negative_label(a, b).has_value());
}

// Sign choices (x on ab, y on bc, z on ac) with x*y*z = +.
std::int64_t BalancedTriangles(const SignedGraph& g, int a, int b, int c) {
  std::int64_t count = 0;
  for (Sign x : PairSigns(g, a, b)) {
    for (Sign y : PairSigns(g, b, c)) {
      for (Sign z : PairSigns(g, a, c)) {
        if (x * y * z == Sign::kPlus) ++count;
      }
    }
  }
  return count;
}

void CountTriple(const SignedGraph& g, int a, int b, int c, Census& out) {
  const std::int64_t balanced = BalancedTriangles(g, a, b, c);
  out.k3 += balanced;
  const int loops = static_cast<int>(g.has_loop(a)) +
                    static_cast<int>(g.has_loop(b)) +
                    static_cast<int>(g.has_loop(c));
  if (loops == 3) out.k33 += balanced;

  const std::array<int, 3> v{a, b, c};
  const bool full = Multiplicity(g, a, b) == 2 && Multiplicity(g, b, c) == 2 &&
                    Multiplicity(g, a, c) == 2;
  if (full) {
    if (loops == 0) ++out.d3;
    out.d31 += loops;
  }
  // G-circ with apex v[k]: loop at the apex, both signs on the two apex
  // pairs, exactly one edge on the base (else it sits inside a D3^1).
  for (int k = 0; k < 3; ++k) {
    const int apex = v[k];
    const int p = v[(k + 1) % 3];
    const int q = v[(k + 2) % 3];
    if (g.has_loop(apex) && Multiplicity(g, apex, p) == 2 &&
        Multiplicity(g, apex, q) == 2 && Multiplicity(g, p, q) == 1) {
      ++out.g_circ;
    }
  }
}

void CountQuadruple(const SignedGraph& g, const std::array<int, 4>& q,
                    Census& out) {
  // A K4 selection is balanced iff its signs are sigma(i) sigma(j) for some
  // sigma; count the distinct sign patterns sigma induces, fixing sigma(q0).
  static constexpr std::array<std::array<int, 2>, 6> kPairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (int mask = 0; mask < 8; ++mask) {
    const std::array<Sign, 4> sigma{
        Sign::kPlus, (mask & 1) ? Sign::kMinus : Sign::kPlus,
        (mask & 2) ? Sign::kMinus : Sign::kPlus,
        (mask & 4) ? Sign::kMinus : Sign::kPlus};
    bool present = true;
    for (const auto& [x, y] : kPairs) {
      const Sign s = sigma[x] * sigma[y];
      const auto label = s == Sign::kPlus ? g.positive_label(q[x], q[y])
                                          : g.negative_label(q[x], q[y]);
      if (!label) {
        present = false;
        break;
      }
    }
    if (present) ++out.k4;
  }
}

}  // namespace

Census ComputeCensus(const SignedGraph& g) {
  RequireNoB2(g, "census");
  Census out;
  const int ell = g.ell();
  for (int a = 1; a <= ell; ++a) {
    for (int b = a + 1; b <= ell; ++b) {
      const int m = Multiplicity(g, a, b);
      const bool la = g.has_loop(a);
      const bool lb = g.has_loop(b);
      if (m == 2) out.d21 += static_cast<int>(la) + static_cast<int>(lb);
      if (la && lb) out.k22 += m;
      for (int c = b + 1; c <= ell; ++c) {
        CountTriple(g, a, b, c, out);
        for (int d = c + 1; d <= ell; ++d) CountQuadruple(g, {a, b, c, d}, out);
      }
    }
  }
  return out;
}

std::int64_t Phi3Formula(const Census& c) {
  return 2 * (c.k3 + c.k4 + c.d3 + c.d21 + c.k22 + c.k33 + c.g_circ) +
         5 * c.d31;
}

std::int64_t DimI32Formula(const SignedGraph& g, const Census& c) {
  RequireNoB2(g, "dim I_2^3 closed form");
  const std::int64_t n = g.n();
  return (n - 2) * (c.k3 + c.d21 + c.k22) - 2 * c.k4 - 2 * c.d3 -
         2 * c.g_circ - 2 * c.k33 - 5 * c.d31;
}

}  // namespace falk
