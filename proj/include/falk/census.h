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

#ifndef FALK_CENSUS_H_
#define FALK_CENSUS_H_

#include <cstdint>
#include <string>

#include "falk/signed_graph.h"

namespace falk {

// Edge-label subsets of G in each of the eight subgraph classes.
struct Census {
  std::int64_t k3 = 0;      // balanced triangles
  std::int64_t k4 = 0;      // balanced K4 (one edge per pair)
  std::int64_t d3 = 0;      // D3 with no loop on its vertices
  std::int64_t d21 = 0;     // {+ij, -ij, loop at i or j}
  std::int64_t k22 = 0;     // {edge ij, loop i, loop j}
  std::int64_t k33 = 0;     // balanced triangle plus its three loops
  std::int64_t g_circ = 0;  // G-circ not inside a D3^1 of G
  std::int64_t d31 = 0;     // D3 plus one loop

  friend bool operator==(const Census&, const Census&) = default;
};

std::string ToString(const Census& c);

// Counts by local enumeration over vertex triples and quadruples.
// Throws B2Present.
Census ComputeCensus(const SignedGraph& g);

// 2(k3 + k4 + d3 + d21 + k22 + k33 + g_circ) + 5 d31.
std::int64_t Phi3Formula(const Census& c);

// Closed form for dim I_2^3:
//   (n-2)(k3 + d21 + k22) - 2k4 - 2d3 - 2g_circ - 2k33 - 5d31.
// Throws B2Present.
std::int64_t DimI32Formula(const SignedGraph& g, const Census& c);

}  // namespace falk

#endif  // FALK_CENSUS_H_
