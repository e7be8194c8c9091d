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

#include <random>

#include <gtest/gtest.h>

#include "falk/error.h"
#include "falk/generator.h"
#include "falk/os_algebra.h"
#include "test_support.h"

namespace falk {
namespace {

using ::falk::testing::BruteCensus;
using ::falk::testing::LoadFixture;
using ::falk::testing::RandomGraphNoB2;
using ::falk::testing::RandomSwitching;

Census Make(std::int64_t k3, std::int64_t k4, std::int64_t d3,
            std::int64_t d21, std::int64_t k22, std::int64_t k33,
            std::int64_t g_circ, std::int64_t d31) {
  return {k3, k4, d3, d21, k22, k33, g_circ, d31};
}

TEST(CensusTest, Fig4) {
  const SignedGraph g = LoadFixture("fig4");
  EXPECT_EQ(ComputeCensus(g), Make(9, 2, 0, 3, 0, 0, 2, 1));
  EXPECT_EQ(BruteCensus(g), Make(9, 2, 0, 3, 0, 0, 2, 1));
}

TEST(CensusTest, SmallFixtures) {
  // Frozen from the brute-force subset enumeration.
  EXPECT_EQ(ComputeCensus(LoadFixture("g_circ")), Make(2, 0, 0, 2, 0, 0, 1, 0));
  EXPECT_EQ(ComputeCensus(LoadFixture("d31")), Make(4, 0, 0, 2, 0, 0, 0, 1));
  EXPECT_EQ(ComputeCensus(LoadFixture("d3")), Make(4, 0, 1, 0, 0, 0, 0, 0));
  EXPECT_EQ(ComputeCensus(LoadFixture("k4")), Make(4, 1, 0, 0, 0, 0, 0, 0));
  EXPECT_EQ(ComputeCensus(LoadFixture("k33")), Make(1, 0, 0, 0, 3, 1, 0, 0));
  for (const char* name : {"g_circ", "d31", "d3", "k4", "k33"}) {
    EXPECT_EQ(ComputeCensus(LoadFixture(name)), BruteCensus(LoadFixture(name)))
        << name;
  }
}

TEST(CensusTest, RejectsB2) {
  try {
    ComputeCensus(LoadFixture("b2"));
    FAIL();
  } catch (const FalkError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kB2Present);
  }
  EXPECT_THROW(DimI32Formula(LoadFixture("b2"), Census{}), FalkError);
}

TEST(CensusTest, Phi3Formula) {
  EXPECT_EQ(Phi3Formula(Make(9, 2, 0, 3, 0, 0, 2, 1)), 37);
  EXPECT_EQ(Phi3Formula(Census{}), 0);
  EXPECT_EQ(Phi3Formula(Make(4, 0, 0, 2, 0, 0, 0, 1)), 17);
  EXPECT_EQ(Phi3Formula(Make(2, 0, 0, 2, 0, 0, 1, 0)), 10);
}

TEST(CensusTest, DimI32Formula) {
  const SignedGraph gc = LoadFixture("g_circ");
  EXPECT_EQ(DimI32Formula(gc, ComputeCensus(gc)), 14);
  const SignedGraph d31 = LoadFixture("d31");
  EXPECT_EQ(DimI32Formula(d31, ComputeCensus(d31)), 25);
  const SignedGraph k33 = LoadFixture("k33");
  EXPECT_EQ(DimI32Formula(k33, ComputeCensus(k33)), 14);
  const SignedGraph fig4 = LoadFixture("fig4");
  EXPECT_EQ(DimI32Formula(fig4, ComputeCensus(fig4)), RankI32(fig4));
}

// The k33 reading of the first parenthesis disagrees with the rank on K3^3.
TEST(CensusTest, PrintedLemmaReadingDisagreesOnK33) {
  const SignedGraph g = LoadFixture("k33");
  const Census c = ComputeCensus(g);
  const std::int64_t printed = (g.n() - 2) * (c.k3 + c.d21 + c.k33) -
                               2 * c.k4 - 2 * c.d3 - 2 * c.g_circ -
                               2 * c.k33 - 5 * c.d31;
  EXPECT_EQ(printed, 6);
  EXPECT_EQ(RankI32(g), 14);
}

TEST(CensusTest, UnsignedCompleteGraphs) {
  for (int ell = 1; ell <= 7; ++ell) {
    SignedGraph::Builder b(ell);
    for (int i = 1; i <= ell; ++i) {
      for (int j = i + 1; j <= ell; ++j) b.AddPositive(i, j);
    }
    const SignedGraph g = std::move(b).Build();
    const Census c = ComputeCensus(g);
    EXPECT_EQ(c, Make(Choose(ell, 3), Choose(ell, 4), 0, 0, 0, 0, 0, 0));
    EXPECT_EQ(Phi3Formula(c), 2 * (Choose(ell, 3) + Choose(ell, 4)));
    EXPECT_EQ(Phi3Oracle(g), Phi3Formula(c)) << ell;
  }
}

// Property: the local enumeration matches the brute-force subset census,
// and the triangle kinds add up.
TEST(CensusPropertyTest, MatchesBruteForce) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const int ell = 2 + static_cast<int>(rng() % 3);
    const SignedGraph g = RandomGraphNoB2(rng, ell, 0.6, 0.5, 0.5);
    const Census c = ComputeCensus(g);
    EXPECT_EQ(c, BruteCensus(g)) << ToString(c);
    EXPECT_EQ(static_cast<std::int64_t>(Triangles(g).size()),
              c.k3 + c.d21 + c.k22);
  }
}

TEST(CensusPropertyTest, MatchesBruteForceExhaustiveThreeVertices) {
  ForEachSignedGraph(3, 9, [](const SignedGraph& g) {
    EXPECT_EQ(ComputeCensus(g), BruteCensus(g));
  });
}

// Property: census is a switching invariant.
TEST(CensusPropertyTest, SwitchingInvariance) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const int ell = 2 + static_cast<int>(rng() % 5);
    const SignedGraph g = RandomGraphNoB2(rng, ell, 0.6, 0.4, 0.4);
    EXPECT_EQ(ComputeCensus(g),
              ComputeCensus(Switch(g, RandomSwitching(rng, ell))));
  }
}

// Property: formula and oracle agree on random graphs without B2.
TEST(CensusPropertyTest, FormulaMatchesOracle) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int ell = 2 + static_cast<int>(rng() % 4);
    const SignedGraph g = RandomGraphNoB2(rng, ell, 0.6, 0.5, 0.4);
    const Census c = ComputeCensus(g);
    EXPECT_EQ(Phi3Formula(c), Phi3Oracle(g)) << ToString(c);
    EXPECT_EQ(DimI32Formula(g, c), RankI32(g)) << ToString(c);
  }
}

}  // namespace
}  // namespace falk
