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

#include <algorithm>
#include <bit>
#include <string>

#include "falk/error.h"

namespace falk {

void Validate(const GenConfig& cfg) {
  auto prob_ok = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (cfg.ell < 1) {
    throw FalkError(ErrorCode::kInvalidArgument, "need at least one vertex");
  }
  if (!prob_ok(cfg.edge_prob_pos) || !prob_ok(cfg.edge_prob_neg) ||
      !prob_ok(cfg.loop_prob)) {
    throw FalkError(ErrorCode::kInvalidArgument,
                    "probabilities must lie in [0,1]");
  }
  if (cfg.samples < 1) {
    throw FalkError(ErrorCode::kInvalidArgument, "samples must be >= 1");
  }
}

namespace {

// Canonical label order: positives, negatives, loops.
SignedGraph Assemble(int ell, const std::vector<std::pair<int, int>>& pos,
                     const std::vector<std::pair<int, int>>& neg,
                     const std::vector<int>& loops) {
  SignedGraph::Builder builder(ell);
  for (const auto& [i, j] : pos) builder.AddPositive(i, j);
  for (const auto& [i, j] : neg) builder.AddNegative(i, j);
  for (int v : loops) builder.AddLoop(v);
  return std::move(builder).Build();
}

}  // namespace

GraphGenerator::GraphGenerator(const GenConfig& cfg)
    : cfg_(cfg), engine_(cfg.seed) {
  Validate(cfg_);
}

bool GraphGenerator::Bernoulli(double p) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

SignedGraph GraphGenerator::Next() {
  const int ell = cfg_.ell;
  std::vector<std::pair<int, int>> pos;
  std::vector<std::pair<int, int>> neg;
  for (int i = 1; i <= ell; ++i) {
    for (int j = i + 1; j <= ell; ++j) {
      if (Bernoulli(cfg_.edge_prob_pos)) pos.emplace_back(i, j);
      if (Bernoulli(cfg_.edge_prob_neg)) neg.emplace_back(i, j);
    }
  }
  std::vector<bool> loop(ell + 1, false);
  for (int v = 1; v <= ell; ++v) loop[v] = Bernoulli(cfg_.loop_prob);

  auto double_pair = [&](int i, int j) {
    return std::find(pos.begin(), pos.end(), std::pair{i, j}) != pos.end() &&
           std::find(neg.begin(), neg.end(), std::pair{i, j}) != neg.end();
  };
  // Repair: each step removes one loop, so this terminates.
  for (;;) {
    bool repaired = false;
    for (int i = 1; i <= ell && !repaired; ++i) {
      for (int j = i + 1; j <= ell && !repaired; ++j) {
        if (loop[i] && loop[j] && double_pair(i, j)) {
          loop[(engine_() & 1) ? j : i] = false;
          repaired = true;
        }
      }
    }
    if (!repaired) break;
  }
  std::vector<int> loops;
  for (int v = 1; v <= ell; ++v) {
    if (loop[v]) loops.push_back(v);
  }
  return Assemble(ell, pos, neg, loops);
}

SignedGraph RandomNoB2(const GenConfig& cfg) {
  return GraphGenerator(cfg).Next();
}

std::vector<SignedGraph> RandomSamples(const GenConfig& cfg) {
  GraphGenerator gen(cfg);
  std::vector<SignedGraph> out;
  out.reserve(cfg.samples);
  for (int k = 0; k < cfg.samples; ++k) out.push_back(gen.Next());
  return out;
}

void ForEachSignedGraph(int ell, int max_n,
                        const std::function<void(const SignedGraph&)>& visit) {
  if (ell < 1) {
    throw FalkError(ErrorCode::kInvalidArgument, "need at least one vertex");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= ell; ++i) {
    for (int j = i + 1; j <= ell; ++j) pairs.emplace_back(i, j);
  }
  const int bits = 2 * static_cast<int>(pairs.size()) + ell;
  if (bits > 30) {
    throw FalkError(ErrorCode::kInvalidArgument,
                    "exhaustive enumeration is limited to ell <= 5");
  }
  std::vector<std::pair<int, int>> pos;
  std::vector<std::pair<int, int>> neg;
  std::vector<int> loops;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
    if (std::popcount(mask) > max_n) continue;
    pos.clear();
    neg.clear();
    loops.clear();
    for (size_t p = 0; p < pairs.size(); ++p) {
      if (mask >> (2 * p) & 1) pos.push_back(pairs[p]);
      if (mask >> (2 * p + 1) & 1) neg.push_back(pairs[p]);
    }
    const int loop_base = 2 * static_cast<int>(pairs.size());
    for (int v = 1; v <= ell; ++v) {
      if (mask >> (loop_base + v - 1) & 1) loops.push_back(v);
    }
    bool b2 = false;
    for (size_t p = 0; p < pairs.size() && !b2; ++p) {
      const auto [i, j] = pairs[p];
      b2 = (mask >> (2 * p) & 1) && (mask >> (2 * p + 1) & 1) &&
           (mask >> (loop_base + i - 1) & 1) &&
           (mask >> (loop_base + j - 1) & 1);
    }
    if (b2) continue;
    visit(Assemble(ell, pos, neg, loops));
  }
}

std::vector<SignedGraph> EnumerateAll(int ell, int max_n) {
  std::vector<SignedGraph> out;
  ForEachSignedGraph(ell, max_n,
                     [&out](const SignedGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace falk
