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

#include "falk/generator.h"

#include <set>
#include <string>

#include <gtest/gtest.h>

#include "falk/error.h"
#include "falk/graph_io.h"
#include "test_support.h"

namespace falk {
namespace {

TEST(GeneratorTest, AllZeroProbabilities) {
  GenConfig cfg;
  cfg.ell = 1;
  cfg.edge_prob_pos = cfg.edge_prob_neg = cfg.loop_prob = 0.0;
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    cfg.seed = seed;
    EXPECT_EQ(RandomNoB2(cfg).n(), 0);
  }
}

TEST(GeneratorTest, FullDensityIsRepaired) {
  GenConfig cfg;
  cfg.ell = 2;
  cfg.edge_prob_pos = cfg.edge_prob_neg = cfg.loop_prob = 1.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    cfg.seed = seed;
    const SignedGraph g = RandomNoB2(cfg);
    EXPECT_FALSE(ContainsB2(g));
    EXPECT_EQ(g.n(), 3);
    EXPECT_EQ(g.loop_labels().size(), 1u);
  }
}

TEST(GeneratorTest, SamplesAvoidB2) {
  GenConfig cfg;
  cfg.ell = 5;
  cfg.edge_prob_pos = 0.5;
  cfg.edge_prob_neg = 0.3;
  cfg.loop_prob = 0.3;
  cfg.seed = 42;
  cfg.samples = 200;
  for (const SignedGraph& g : RandomSamples(cfg)) EXPECT_FALSE(ContainsB2(g));
  cfg.loop_prob = 0.9;
  cfg.edge_prob_neg = 0.9;
  for (const SignedGraph& g : RandomSamples(cfg)) EXPECT_FALSE(ContainsB2(g));
}

TEST(GeneratorTest, Deterministic) {
  GenConfig cfg;
  cfg.ell = 6;
  cfg.seed = 12345;
  cfg.samples = 30;
  const auto a = RandomSamples(cfg);
  const auto b = RandomSamples(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(SerializeGraph(a[k]), SerializeGraph(b[k]));
  }
  EXPECT_EQ(SerializeGraph(RandomNoB2(cfg)), SerializeGraph(a[0]));
  cfg.seed = 12346;
  EXPECT_NE(SerializeGraph(RandomNoB2(cfg)), SerializeGraph(a[0]));
}

TEST(GeneratorTest, FrozenSample) {
  // Pins the PRNG contract: mt19937_64, top-53-bit uniforms, draw order.
  GenConfig cfg;
  cfg.ell = 4;
  cfg.seed = 1;
  cfg.edge_prob_pos = 0.5;
  cfg.edge_prob_neg = 0.5;
  cfg.loop_prob = 0.5;
  std::mt19937_64 engine(1);
  std::vector<bool> draws;
  for (int k = 0; k < 2 * 6 + 4; ++k) {
    draws.push_back(static_cast<double>(engine() >> 11) * 0x1.0p-53 < 0.5);
  }
  const SignedGraph g = RandomNoB2(cfg);
  int d = 0;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      EXPECT_EQ(g.positive_label(i, j).has_value(), draws[d++]);
      EXPECT_EQ(g.negative_label(i, j).has_value(), draws[d++]);
    }
  }
  if (!ContainsB2(g)) {
    for (int v = 1; v <= 4; ++v) {
      // Loops can only have been removed by repair.
      if (g.has_loop(v)) EXPECT_TRUE(draws[12 + v - 1]);
    }
  }
}

TEST(GeneratorTest, InvalidConfig) {
  GenConfig cfg;
  cfg.loop_prob = 1.5;
  EXPECT_THROW(RandomNoB2(cfg), FalkError);
  cfg.loop_prob = 0.5;
  cfg.samples = 0;
  EXPECT_THROW(RandomSamples(cfg), FalkError);
  cfg.samples = 1;
  cfg.ell = 0;
  EXPECT_THROW(RandomNoB2(cfg), FalkError);
}

TEST(EnumerateTest, Counts) {
  EXPECT_EQ(EnumerateAll(1, 100).size(), 2u);
  const auto two = EnumerateAll(2, 100);
  EXPECT_EQ(two.size(), 15u);
  // ell = 3: 2^9 patterns; a B2 on pair ij fixes 4 bits. Inclusion-exclusion
  // over the three pairs: 512 - 3*32 + 3*4 - 1.
  EXPECT_EQ(EnumerateAll(3, 100).size(), 512u - 96u + 12u - 1u);
  EXPECT_EQ(EnumerateAll(2, 1).size(), 5u);
}

TEST(EnumerateTest, DistinctAndB2Free) {
  std::set<std::string> seen;
  bool has_d31 = false;
  ForEachSignedGraph(3, 7, [&](const SignedGraph& g) {
    EXPECT_FALSE(ContainsB2(g));
    EXPECT_LE(g.n(), 7);
    EXPECT_TRUE(seen.insert(SerializeGraph(g)).second);
    if (g.n() == 7 && g.loop_labels().size() == 1) has_d31 = true;
  });
  EXPECT_TRUE(has_d31);
}

}  // namespace
}  // namespace falk
