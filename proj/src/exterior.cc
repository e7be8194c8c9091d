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

#include "falk/exterior.h"

#include <algorithm>
#include <sstream>
#include <string>

#include "falk/error.h"

namespace falk {

ExteriorVector::ExteriorVector(
    int degree,
    std::initializer_list<std::pair<Monomial, std::int64_t>> terms)
    : degree_(degree) {
  for (const auto& [m, c] : terms) AddWedge(m, c);
}

std::int64_t ExteriorVector::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void ExteriorVector::AddWedge(std::span<const int> labels,
                              std::int64_t coeff) {
  if (static_cast<int>(labels.size()) != degree_) {
    throw FalkError(ErrorCode::kInvalidArgument,
                    "monomial degree does not match vector degree");
  }
  if (coeff == 0) return;
  Monomial m(labels.begin(), labels.end());
  // Insertion sort, counting transpositions.
  bool odd = false;
  for (size_t a = 1; a < m.size(); ++a) {
    for (size_t b = a; b > 0 && m[b - 1] > m[b]; --b) {
      std::swap(m[b - 1], m[b]);
      odd = !odd;
    }
  }
  if (std::adjacent_find(m.begin(), m.end()) != m.end()) return;
  const std::int64_t signed_coeff = odd ? -coeff : coeff;
  auto [it, inserted] = terms_.try_emplace(std::move(m), signed_coeff);
  if (!inserted) {
    it->second += signed_coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void ExteriorVector::Add(const ExteriorVector& other, std::int64_t scale) {
  for (const auto& [m, c] : other.terms_) AddWedge(m, scale * c);
}

std::string ExteriorVector::ToString() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << ' ';
    first = false;
    out << (c < 0 ? '-' : '+');
    if (c != 1 && c != -1) out << (c < 0 ? -c : c);
    out << "e_{";
    for (size_t k = 0; k < m.size(); ++k) out << (k ? "," : "") << m[k];
    out << '}';
  }
  return out.str();
}

ExteriorVector Boundary(std::span<const int> s) {
  if (s.empty()) {
    throw FalkError(ErrorCode::kInvalidArgument, "boundary of e_{}");
  }
  if (!std::is_sorted(s.begin(), s.end()) ||
      std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw FalkError(ErrorCode::kInvalidArgument,
                    "boundary needs an ascending label set");
  }
  ExteriorVector out(static_cast<int>(s.size()) - 1);
  Monomial face;
  for (size_t j = 0; j < s.size(); ++j) {
    face.clear();
    for (size_t k = 0; k < s.size(); ++k) {
      if (k != j) face.push_back(s[k]);
    }
    out.AddWedge(face, j % 2 == 0 ? 1 : -1);
  }
  return out;
}

ExteriorVector Boundary(const ExteriorVector& v) {
  ExteriorVector out(v.degree() - 1);
  for (const auto& [m, c] : v.terms()) out.Add(Boundary(m), c);
  return out;
}

ExteriorVector Wedge(int t, const ExteriorVector& v) {
  ExteriorVector out(v.degree() + 1);
  Monomial labels;
  for (const auto& [m, c] : v.terms()) {
    labels.assign(1, t);
    labels.insert(labels.end(), m.begin(), m.end());
    out.AddWedge(labels, c);
  }
  return out;
}

}  // namespace falk
