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

#include "falk/rank.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "falk/error.h"

namespace falk {

RankMatrix RankMatrix::FromDense(
    const std::vector<std::vector<std::int64_t>>& a) {
  RankMatrix m(1);
  for (const auto& row : a) {
    ExteriorVector v(1);
    for (size_t c = 0; c < row.size(); ++c) {
      const int label = static_cast<int>(c) + 1;
      v.AddWedge(std::span<const int>(&label, 1), row[c]);
    }
    m.AddRow(v);
  }
  return m;
}

void RankMatrix::AddRow(const ExteriorVector& row) {
  if (row.degree() != degree_) {
    throw FalkError(ErrorCode::kInvalidArgument,
                    "row degree " + std::to_string(row.degree()) +
                        " in a degree " + std::to_string(degree_) + " matrix");
  }
  for (const auto& [m, c] : row.terms()) columns_.try_emplace(m, 0);
  rows_.push_back(row);
}

std::vector<SparseRow> RankMatrix::SparseRows() const {
  std::map<Monomial, int> index;
  int next = 0;
  for (const auto& [m, unused] : columns_) index[m] = next++;
  std::vector<SparseRow> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    SparseRow r;
    r.reserve(row.size());
    // Map iteration is ascending, so columns come out sorted.
    for (const auto& [m, c] : row.terms()) r.emplace_back(index.at(m), c);
    out.push_back(std::move(r));
  }
  return out;
}

RankBackend RankBackendFromEnv() {
  const char* value = std::getenv("FALK_RANK_BACKEND");
  if (value == nullptr || std::string(value).empty() ||
      std::string(value) == "exact") {
    return RankBackend::kExact;
  }
  if (std::string(value) == "screened") return RankBackend::kScreened;
  throw FalkError(ErrorCode::kInvalidArgument,
                  std::string("FALK_RANK_BACKEND must be exact or screened, "
                              "got '") +
                      value + "'");
}

namespace {

struct Overflow {};

using BigInt = boost::multiprecision::cpp_int;

std::int64_t Mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t Sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t Gcd(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
  return std::gcd(a, b);
}
bool IsOne(std::int64_t g) { return g == 1; }

BigInt Mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt Sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt Gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}
bool IsOne(const BigInt& g) { return g == 1; }

template <typename Int>
using Row = std::vector<std::pair<int, Int>>;

template <typename Int>
void DivideByContent(Row<Int>& r) {
  Int g = 0;
  for (const auto& [c, v] : r) {
    g = Gcd(g, v);
    if (IsOne(g)) return;
  }
  if (g == 0) return;
  for (auto& [c, v] : r) v /= g;
}

// r <- a*r - b*p, dropping zeros. Both rows ascending by column.
template <typename Int>
Row<Int> Combine(const Int& a, const Row<Int>& r, const Int& b,
                 const Row<Int>& p) {
  Row<Int> out;
  out.reserve(r.size() + p.size());
  size_t x = 0;
  size_t y = 0;
  while (x < r.size() || y < p.size()) {
    if (y == p.size() || (x < r.size() && r[x].first < p[y].first)) {
      out.emplace_back(r[x].first, Mul(a, r[x].second));
      ++x;
    } else if (x == r.size() || p[y].first < r[x].first) {
      out.emplace_back(p[y].first, Sub(Int(0), Mul(b, p[y].second)));
      ++y;
    } else {
      Int v = Sub(Mul(a, r[x].second), Mul(b, p[y].second));
      if (v != 0) out.emplace_back(r[x].first, std::move(v));
      ++x;
      ++y;
    }
  }
  return out;
}

// Forward elimination keeping one pivot row per leading column.
template <typename Int>
int EliminateRank(const std::vector<SparseRow>& input) {
  std::map<int, Row<Int>> pivots;
  for (const SparseRow& source : input) {
    Row<Int> r;
    r.reserve(source.size());
    for (const auto& [c, v] : source) {
      if (v != 0) r.emplace_back(c, Int(v));
    }
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        DivideByContent(r);
        const int lead = r.front().first;
        pivots.emplace(lead, std::move(r));
        break;
      }
      const Row<Int>& p = it->second;
      Int a = p.front().second;
      Int b = r.front().second;
      const Int g = Gcd(a, b);
      a /= g;
      b /= g;
      r = Combine(a, r, b, p);
      DivideByContent(r);
    }
  }
  return static_cast<int>(pivots.size());
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

int ExactRank(const std::vector<SparseRow>& rows) {
  try {
    return EliminateRank<std::int64_t>(rows);
  } catch (const Overflow&) {
    return EliminateRank<BigInt>(rows);
  }
}

int ExactRank(const RankMatrix& m) { return ExactRank(m.SparseRows()); }

int ModPrimeRank(const std::vector<SparseRow>& rows, std::uint64_t p) {
  if (p < 3 || p >= (std::uint64_t{1} << 32)) {
    throw FalkError(ErrorCode::kInvalidArgument,
                    "screen modulus must be an odd prime below 2^32");
  }
  using ModRow = std::vector<std::pair<int, std::uint64_t>>;
  auto reduce = [p](std::int64_t v) {
    const std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p)
                                            : m);
  };
  std::map<int, ModRow> pivots;
  for (const SparseRow& source : rows) {
    ModRow r;
    for (const auto& [c, v] : source) {
      const std::uint64_t x = reduce(v);
      if (x != 0) r.emplace_back(c, x);
    }
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        const std::uint64_t inv = PowMod(r.front().second, p - 2, p);
        for (auto& [c, v] : r) v = v * inv % p;
        const int lead = r.front().first;
        pivots.emplace(lead, std::move(r));
        break;
      }
      // Pivot rows are monic, so r <- r - r0 * pivot.
      const ModRow& piv = it->second;
      const std::uint64_t f = r.front().second;
      ModRow out;
      out.reserve(r.size() + piv.size());
      size_t x = 0;
      size_t y = 0;
      while (x < r.size() || y < piv.size()) {
        if (y == piv.size() || (x < r.size() && r[x].first < piv[y].first)) {
          out.push_back(r[x++]);
        } else if (x == r.size() || piv[y].first < r[x].first) {
          out.emplace_back(piv[y].first, (p - f * piv[y].second % p) % p);
          ++y;
        } else {
          const std::uint64_t v =
              (r[x].second + p - f * piv[y].second % p) % p;
          if (v != 0) out.emplace_back(r[x].first, v);
          ++x;
          ++y;
        }
      }
      r = std::move(out);
    }
  }
  return static_cast<int>(pivots.size());
}

int ModPrimeRank(const RankMatrix& m, std::uint64_t p) {
  return ModPrimeRank(m.SparseRows(), p);
}

int Rank(const RankMatrix& m, RankBackend backend) {
  const auto rows = m.SparseRows();
  if (backend == RankBackend::kScreened) {
    const int screened = ModPrimeRank(rows);
    if (screened == std::min(m.rows(), m.cols())) return screened;
  }
  return ExactRank(rows);
}

}  // namespace falk
