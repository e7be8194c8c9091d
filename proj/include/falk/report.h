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

#ifndef FALK_REPORT_H_
#define FALK_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "falk/census.h"
#include "falk/rank.h"
#include "falk/signed_graph.h"

namespace falk {

// Both computations of phi_3 for one graph. The census side is absent when
// the graph contains a B2.
struct FalkReport {
  int ell = 0;
  int n = 0;
  bool contains_b2 = false;
  std::int64_t triangle_count = 0;
  std::int64_t dim_A2 = 0;
  std::int64_t dim_I3_2 = 0;
  std::int64_t dim_span_F3 = 0;
  std::int64_t phi3_oracle = 0;
  std::optional<std::int64_t> phi3_formula;
  std::optional<Census> census;
  // Set only when both phi_3 values exist.
  std::optional<bool> agreement;
};

FalkReport BuildReport(const SignedGraph& g,
                       RankBackend backend = RankBackend::kExact);

nlohmann::ordered_json CensusToJson(const Census& c);
nlohmann::ordered_json ReportToJson(const FalkReport& r);
std::string RenderText(const FalkReport& r);

}  // namespace falk

#endif  // FALK_REPORT_H_
