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

#ifndef FALK_CLI_H_
#define FALK_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "falk/rank.h"

namespace falk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDisagreement = 2;

struct VerifyOptions {
  int ell = 4;
  int samples = 100;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  double pos = 0.5;
  double neg = 0.3;
  double loop = 0.3;
  int threads = 0;  // 0: hardware concurrency
};

struct VerifySummary {
  std::int64_t checked = 0;
  std::int64_t phi3_agree = 0;
  std::int64_t lemma_agree = 0;  // closed-form dim I_2^3 vs rank
};

int RunCompute(const std::string& path, bool json, RankBackend backend,
               std::ostream& out, std::ostream& err);
int RunCensus(const std::string& path, bool json, std::ostream& out,
              std::ostream& err);
VerifySummary RunVerify(const VerifyOptions& opts, RankBackend backend,
                        std::ostream& out);
int RunSwitch(const std::string& path, const std::string& sigma,
              std::ostream& out, std::ostream& err);

// Entry point for the `falk` tool; args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace falk

#endif  // FALK_CLI_H_
