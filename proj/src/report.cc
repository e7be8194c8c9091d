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

#include "falk/report.h"

#include <sstream>

#include "falk/os_algebra.h"

namespace falk {

FalkReport BuildReport(const SignedGraph& g, RankBackend backend) {
  FalkReport r;
  r.ell = g.ell();
  r.n = g.n();
  r.contains_b2 = ContainsB2(g);
  const auto tris = Triangles(g);
  r.triangle_count = static_cast<std::int64_t>(tris.size());
  r.dim_A2 = r.contains_b2 ? Choose(g.n(), 2) -
                                 Rank(BoundaryMatrix(tris), backend)
                           : DimA2(g, backend);
  r.dim_I3_2 = Rank(I32Matrix(g, tris), backend);
  r.dim_span_F3 = Rank(F3Matrix(g, tris), backend);
  r.phi3_oracle = Phi3FromDims(g.n(), r.dim_A2, r.dim_I3_2);
  if (!r.contains_b2) {
    r.census = ComputeCensus(g);
    r.phi3_formula = Phi3Formula(*r.census);
    r.agreement = *r.phi3_formula == r.phi3_oracle;
  }
  return r;
}

nlohmann::ordered_json CensusToJson(const Census& c) {
  return {{"k3", c.k3},   {"k4", c.k4},   {"d3", c.d3},
          {"d21", c.d21}, {"k22", c.k22}, {"k33", c.k33},
          {"g_circ", c.g_circ}, {"d31", c.d31}};
}

nlohmann::ordered_json ReportToJson(const FalkReport& r) {
  nlohmann::ordered_json j;
  j["ell"] = r.ell;
  j["n"] = r.n;
  j["contains_b2"] = r.contains_b2;
  j["triangle_count"] = r.triangle_count;
  j["dim_A2"] = r.dim_A2;
  j["dim_I3_2"] = r.dim_I3_2;
  j["dim_span_F3"] = r.dim_span_F3;
  j["phi3_oracle"] = r.phi3_oracle;
  if (r.phi3_formula) j["phi3_formula"] = *r.phi3_formula;
  if (r.census) j["census"] = CensusToJson(*r.census);
  if (r.agreement) {
    j["agreement"] = *r.agreement;
  } else {
    j["agreement"] = nullptr;
  }
  return j;
}

std::string RenderText(const FalkReport& r) {
  std::ostringstream out;
  out << "vertices        " << r.ell << "\n"
      << "hyperplanes     " << r.n << "\n"
      << "contains B2     " << (r.contains_b2 ? "yes" : "no") << "\n"
      << "triangles       " << r.triangle_count << "\n"
      << "dim A^2         " << r.dim_A2 << "\n"
      << "dim I_2^3       " << r.dim_I3_2 << "\n"
      << "dim span(F_3)   " << r.dim_span_F3 << "\n"
      << "phi_3 (oracle)  " << r.phi3_oracle << "\n";
  if (r.census) {
    const Census& c = *r.census;
    out << "phi_3 (formula) " << *r.phi3_formula << "\n"
        << "census          k3=" << c.k3 << " k4=" << c.k4 << " d3=" << c.d3
        << " d21=" << c.d21 << " k22=" << c.k22 << " k33=" << c.k33
        << " g_circ=" << c.g_circ << " d31=" << c.d31 << "\n"
        << "agreement       " << (*r.agreement ? "yes" : "NO") << "\n";
  } else {
    out << "note            graph contains B2: main theorem inapplicable, "
           "oracle only\n";
  }
  return out.str();
}

}  // namespace falk
