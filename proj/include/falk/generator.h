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

#ifndef FALK_GENERATOR_H_
#define FALK_GENERATOR_H_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "falk/signed_graph.h"

namespace falk {

struct GenConfig {
  int ell = 5;
  double edge_prob_pos = 0.5;
  double edge_prob_neg = 0.3;
  double loop_prob = 0.3;
  std::uint64_t seed = 1;
  int samples = 1;
};

// Throws InvalidArgument for probabilities outside [0,1], ell < 1 or
// samples < 1.
void Validate(const GenConfig& cfg);

// Reproducible signed-graph source. The engine is std::mt19937_64 seeded
// with cfg.seed; a Bernoulli(p) draw is (engine() >> 11) * 2^-53 < p and a
// repair draw is engine() & 1. Pairs are visited lexicographically drawing
// +, then -, then each vertex draws a loop. Edge labels: positive edges,
// negative edges, loops, each in vertex order. While a B2 remains, one of
// the two loops of the first witness is deleted at random.
class GraphGenerator {
 public:
  explicit GraphGenerator(const GenConfig& cfg);

  SignedGraph Next();

 private:
  bool Bernoulli(double p);

  GenConfig cfg_;
  std::mt19937_64 engine_;
};

// First graph of GraphGenerator(cfg).
SignedGraph RandomNoB2(const GenConfig& cfg);

// cfg.samples consecutive graphs of one generator.
std::vector<SignedGraph> RandomSamples(const GenConfig& cfg);

// Visits every signed graph on [ell] with at most max_n edges and no B2,
// each once. Order: bitmask over (+12, -12, +13, -13, ..., o1, ..., o_ell),
// ascending.
void ForEachSignedGraph(int ell, int max_n,
                        const std::function<void(const SignedGraph&)>& visit);
std::vector<SignedGraph> EnumerateAll(int ell, int max_n);

}  // namespace falk

#endif  // FALK_GENERATOR_H_
