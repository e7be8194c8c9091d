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

#ifndef FALK_EXTERIOR_H_
#define FALK_EXTERIOR_H_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace falk {

// Ascending label set S naming the basis monomial e_S of E^p.
using Monomial = std::vector<int>;

// Sparse element of E^p with integer coefficients over the monomial basis.
class ExteriorVector {
 public:
  explicit ExteriorVector(int degree) : degree_(degree) {}
  ExteriorVector(int degree,
                 std::initializer_list<std::pair<Monomial, std::int64_t>> terms);

  int degree() const { return degree_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(const Monomial& m) const;

  // Adds coeff * e_{labels[0]} ^ ... ^ e_{labels[p-1]}, sorting the labels and
  // applying the sign of the sorting permutation. Repeated labels vanish.
  void AddWedge(std::span<const int> labels, std::int64_t coeff);
  void Add(const ExteriorVector& other, std::int64_t scale = 1);

  // "+e_{234} -e_{134} +e_{124}" style, ascending monomial order.
  std::string ToString() const;

  friend bool operator==(const ExteriorVector&,
                         const ExteriorVector&) = default;

 private:
  int degree_;
  std::map<Monomial, std::int64_t> terms_;
};

// Boundary of e_S: sum_j (-1)^(j-1) e_{S minus its j-th element}.
// `s` must be ascending and nonempty.
ExteriorVector Boundary(std::span<const int> s);
ExteriorVector Boundary(const ExteriorVector& v);

// e_t ^ v.
ExteriorVector Wedge(int t, const ExteriorVector& v);

}  // namespace falk

#endif  // FALK_EXTERIOR_H_
