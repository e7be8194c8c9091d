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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "falk/census.h"
#include "falk/exterior.h"
#include "falk/generator.h"
#include "falk/os_algebra.h"
#include "falk/rank.h"
#include "falk/signed_graph.h"
#include "test_support.h"

namespace falk {
namespace {

using ::falk::testing::LoadFixture;

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
    ++checks_;
  }
  template <typename T>
  void ExpectEq(const T& got, const T& want, const std::string& what) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", want " << want;
    Expect(got == want, msg.str());
  }

  bool Report(double seconds) const {
    std::printf("[%s] %s (%ld checks, %.3f s)\n", failed_ == 0 ? "PASS" : "FAIL",
                name_.c_str(), checks_, seconds);
    for (const auto& f : failures_) std::printf("    %s\n", f.c_str());
    return failed_ == 0;
  }

 private:
  std::string name_;
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
};

double Seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::vector<std::vector<int>> LabelSets(const std::vector<Triangle>& tris) {
  std::vector<std::vector<int>> out;
  for (const auto& t : tris) out.emplace_back(t.labels.begin(), t.labels.end());
  return out;
}

struct Evaluation {
  std::int64_t triangles = 0;
  std::int64_t rank_i32 = 0;
  std::int64_t span_f3 = 0;
  std::int64_t screen_i32 = 0;
  std::int64_t oracle = 0;
  std::int64_t formula = 0;
  std::int64_t lemma = 0;
};

Evaluation Evaluate(const SignedGraph& g) {
  Evaluation e;
  const auto tris = Triangles(g);
  const RankMatrix i32 = I32Matrix(g, tris);
  e.triangles = static_cast<std::int64_t>(tris.size());
  e.rank_i32 = ExactRank(i32);
  e.screen_i32 = ModPrimeRank(i32);
  e.span_f3 = ExactRank(F3Matrix(g, tris));
  e.oracle = Phi3FromDims(g.n(), DimA2(g), e.rank_i32);
  const Census c = ComputeCensus(g);
  e.formula = Phi3Formula(c);
  e.lemma = DimI32Formula(g, c);
  return e;
}

// Graphs from criteria 5 and 6; reused by 8 and 9.
std::vector<SignedGraph> g_exhaustive;
std::vector<SignedGraph> g_random;
std::vector<Evaluation> g_exhaustive_eval;
std::vector<Evaluation> g_random_eval;

bool Criterion1() {
  Criterion c("1 G-circ: dim span(F3) = 10, dim I_2^3 = 14, < 0.1 s");
  const SignedGraph g = LoadFixture("g_circ");
  std::int64_t span = 0, rank = 0;
  const double t = Seconds([&] {
    span = DimSpanF3(g);
    rank = RankI32(g);
  });
  c.ExpectEq<std::int64_t>(span, 10, "dim span(F3)");
  c.ExpectEq<std::int64_t>(rank, 14, "dim I_2^3");
  c.Expect(t < 0.1, "runtime " + std::to_string(t) + " s >= 0.1 s");
  return c.Report(t);
}

bool Criterion2() {
  Criterion c("2 D3^1: 6 triangles, 24 F3 rows, span 19, dim I_2^3 25, phi3 17");
  const SignedGraph g = LoadFixture("d31");
  const double t = Seconds([&] {
    const auto tris = Triangles(g);
    c.ExpectEq<std::size_t>(tris.size(), 6, "triangles");
    c.ExpectEq(F3Matrix(g, tris).rows(), 24, "F3 rows");
    c.ExpectEq<std::int64_t>(DimSpanF3(g), 19, "dim span(F3)");
    c.ExpectEq<std::int64_t>(RankI32(g), 25, "dim I_2^3");
    c.ExpectEq<std::int64_t>(Phi3Oracle(g), 17, "phi3 oracle");
    c.ExpectEq<std::int64_t>(Phi3Formula(ComputeCensus(g)), 17,
                             "phi3 formula");
  });
  return c.Report(t);
}

bool Criterion3() {
  Criterion c("3 D3, K4, K3^3: span 10, dim I_2^3 14, phi3 10 both ways");
  const double t = Seconds([&] {
    for (const char* name : {"d3", "k4", "k33"}) {
      const SignedGraph g = LoadFixture(name);
      const std::string p = std::string(name) + " ";
      c.ExpectEq<std::int64_t>(DimSpanF3(g), 10, p + "dim span(F3)");
      c.ExpectEq<std::int64_t>(RankI32(g), 14, p + "dim I_2^3");
      c.ExpectEq<std::int64_t>(Phi3Oracle(g), 10, p + "phi3 oracle");
      c.ExpectEq<std::int64_t>(Phi3Formula(ComputeCensus(g)), 10,
                               p + "phi3 formula");
    }
  });
  return c.Report(t);
}

bool Criterion4() {
  Criterion c("4 Fig. 4 graph: census (9,2,0,3,0,0,2,1), phi3 37 both, "
              "dim A2 43, < 1 s");
  const SignedGraph g = LoadFixture("fig4");
  const double t = Seconds([&] {
    const Census census = ComputeCensus(g);
    c.Expect(census == Census{9, 2, 0, 3, 0, 0, 2, 1},
             "census " + ToString(census));
    c.ExpectEq<std::int64_t>(Phi3Formula(census), 37, "phi3 formula");
    c.ExpectEq<std::int64_t>(Phi3Oracle(g), 37, "phi3 oracle");
    c.ExpectEq<std::int64_t>(DimA2(g), Choose(11, 2) - 12, "dim A2");
    c.ExpectEq<std::int64_t>(DimA2(g), 43, "dim A2");
    const auto tris = Triangles(g);
    c.ExpectEq(F3Matrix(g, tris).rows(), 96, "F3 rows");
    c.ExpectEq(F3Matrix(g, tris).cols() <= 165, true, "F3 columns <= 165");
  });
  c.Expect(t < 1.0, "runtime " + std::to_string(t) + " s >= 1 s");
  return c.Report(t);
}

bool Criterion5() {
  Criterion c("5 every graph without B2 on <= 3 vertices: formula = oracle, "
              "< 30 s");
  const double t = Seconds([&] {
    for (int ell = 1; ell <= 3; ++ell) {
      ForEachSignedGraph(ell, 3 * ell * ell, [&](const SignedGraph& g) {
        g_exhaustive.push_back(g);
      });
    }
    for (const SignedGraph& g : g_exhaustive) {
      g_exhaustive_eval.push_back(Evaluate(g));
      const auto& e = g_exhaustive_eval.back();
      c.ExpectEq(e.formula, e.oracle,
                 "phi3 for graph #" + std::to_string(g_exhaustive.size()));
    }
  });
  c.ExpectEq<std::size_t>(g_exhaustive.size(), 2 + 15 + 427, "graph count");
  c.Expect(t < 30.0, "runtime " + std::to_string(t) + " s >= 30 s");
  return c.Report(t);
}

bool Criterion6() {
  Criterion c("6 500 random graphs at each ell in {5,6,7}, seed 2026: "
              "formula = oracle, < 5 min");
  const double t = Seconds([&] {
    for (int ell : {5, 6, 7}) {
      GenConfig cfg;
      cfg.ell = ell;
      cfg.edge_prob_pos = 0.5;
      cfg.edge_prob_neg = 0.3;
      cfg.loop_prob = 0.3;
      cfg.seed = 2026 + ell;
      cfg.samples = 500;
      for (const SignedGraph& g : RandomSamples(cfg)) {
        g_random.push_back(g);
        g_random_eval.push_back(Evaluate(g));
        const auto& e = g_random_eval.back();
        c.ExpectEq(e.formula, e.oracle,
                   "phi3 ell=" + std::to_string(ell) + " sample " +
                       std::to_string(g_random.size()));
      }
    }
  });
  c.ExpectEq<std::size_t>(g_random.size(), 1500, "sample count");
  c.Expect(t < 300.0, "runtime " + std::to_string(t) + " s >= 300 s");
  return c.Report(t);
}

bool Criterion7() {
  Criterion c("7 100 random (graph, sigma): census, triangles, phi3 invariant");
  std::mt19937_64 rng(7007);
  const double t = Seconds([&] {
    for (int trial = 0; trial < 100; ++trial) {
      const int ell = 3 + trial % 4;
      const SignedGraph g =
          testing::RandomGraphNoB2(rng, ell, 0.6, 0.4, 0.35);
      const SignedGraph s = Switch(g, testing::RandomSwitching(rng, ell));
      const std::string tag = " trial " + std::to_string(trial);
      c.Expect(ComputeCensus(g) == ComputeCensus(s), "census" + tag);
      c.Expect(LabelSets(Triangles(g)) == LabelSets(Triangles(s)),
               "triangles" + tag);
      c.ExpectEq(Phi3Oracle(s), Phi3Oracle(g), "phi3 oracle" + tag);
      c.ExpectEq(Phi3Formula(ComputeCensus(s)), Phi3Formula(ComputeCensus(g)),
                 "phi3 formula" + tag);
    }
  });
  return c.Report(t);
}

bool Criterion8() {
  Criterion c("8 closed-form dim I_2^3 (k22 reading) = rank on fixtures and "
              "criteria 5-6 graphs");
  const double t = Seconds([&] {
    for (const char* name : {"g_circ", "d31", "d3", "k4", "k33", "fig4", "k2"}) {
      const SignedGraph g = LoadFixture(name);
      c.ExpectEq(DimI32Formula(g, ComputeCensus(g)), RankI32(g), name);
    }
    for (size_t k = 0; k < g_exhaustive_eval.size(); ++k) {
      const auto& e = g_exhaustive_eval[k];
      c.ExpectEq(e.lemma, e.rank_i32, "exhaustive #" + std::to_string(k));
    }
    for (size_t k = 0; k < g_random_eval.size(); ++k) {
      const auto& e = g_random_eval[k];
      c.ExpectEq(e.lemma, e.rank_i32, "random #" + std::to_string(k));
    }
  });
  return c.Report(t);
}

bool Criterion9() {
  Criterion c("9 dd = 0 for n <= 8; dim I_2^3 = #triangles + span(F3); "
              "GF(p) rank <= exact rank");
  const double t = Seconds([&] {
    for (int n = 3; n <= 8; ++n) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int k = j + 1; k <= n; ++k) {
            c.Expect(Boundary(Boundary(std::vector<int>{i, j, k})).empty(),
                     "dd e_{" + std::to_string(i) + std::to_string(j) +
                         std::to_string(k) + "}");
          }
        }
      }
    }
    for (const auto* evals : {&g_exhaustive_eval, &g_random_eval}) {
      for (size_t k = 0; k < evals->size(); ++k) {
        const auto& e = (*evals)[k];
        c.ExpectEq(e.rank_i32, e.triangles + e.span_f3,
                   "direct sum #" + std::to_string(k));
        c.Expect(e.screen_i32 <= e.rank_i32,
                 "screen exceeds exact #" + std::to_string(k));
      }
    }
  });
  return c.Report(t);
}

}  // namespace
}  // namespace falk

int main() {
  bool ok = true;
  // Order matters: 8 and 9 reuse the graphs of 5 and 6.
  for (auto* criterion :
       {&falk::Criterion1, &falk::Criterion2, &falk::Criterion3,
        &falk::Criterion4, &falk::Criterion5, &falk::Criterion6,
        &falk::Criterion7, &falk::Criterion8, &falk::Criterion9}) {
    ok = criterion() && ok;
  }
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
