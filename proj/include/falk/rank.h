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

#ifndef FALK_RANK_H_
#define FALK_RANK_H_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "falk/exterior.h"

namespace falk {

// One sparse integer row: (column, value) pairs with ascending columns and
// nonzero values.
using SparseRow = std::vector<std::pair<int, std::int64_t>>;

// Integer matrix whose rows are exterior vectors of one degree. Columns are
// the monomials that occur in some row, numbered in ascending order.
class RankMatrix {
 public:
  explicit RankMatrix(int degree) : degree_(degree) {}
  // Plain integer matrix, for callers without an exterior-algebra origin.
  static RankMatrix FromDense(const std::vector<std::vector<std::int64_t>>& a);

  // Throws InvalidArgument on a degree mismatch. Zero rows are kept.
  void AddRow(const ExteriorVector& row);

  int degree() const { return degree_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return static_cast<int>(columns_.size()); }
  // Rows with column indices resolved.
  std::vector<SparseRow> SparseRows() const;

 private:
  int degree_;
  std::map<Monomial, int> columns_;
  std::vector<ExteriorVector> rows_;
};

enum class RankBackend { kExact, kScreened };

// Reads FALK_RANK_BACKEND ("exact" or "screened"; unset means exact).
// Throws InvalidArgument on any other value.
RankBackend RankBackendFromEnv();

// Rank over the rationals by fraction-free elimination.
int ExactRank(const RankMatrix& m);
int ExactRank(const std::vector<SparseRow>& rows);

inline constexpr std::uint64_t kScreenPrime = 2147483647;  // 2^31 - 1

// Rank over GF(p). Never exceeds the rational rank.
int ModPrimeRank(const RankMatrix& m, std::uint64_t p = kScreenPrime);
int ModPrimeRank(const std::vector<SparseRow>& rows,
                 std::uint64_t p = kScreenPrime);

// Exact rank; kScreened first tries the GF(p) rank and accepts it only when
// it is maximal.
int Rank(const RankMatrix& m, RankBackend backend);

}  // namespace falk

#endif  // FALK_RANK_H_
