// Copyright 2026 The talex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "talex/delta_result.hpp"

#include <optional>

namespace talex::closed_form {

struct GenusReport {
  int degree = 0;
  bool monic = false;
  std::optional<int> genus; // (degree + 2) / 4 when integral
  bool fibered_consistent = false;
  bool degree_matches_family = false; // degree == 4n + 6
  bool genus_matches_family = false;  // genus == n + 2
};

/// Fibered knots of genus g have monic twisted polynomials of degree 4g - 2
/// for nonabelian SL2 representations; read that relation backwards.
inline GenusReport genus_fiberedness_report(const DeltaResult &d, int n, const Real &tol = Real("1e-20")) {
  GenusReport r;
  const LaurentPoly &p = d.poly;
  if (p.is_zero())
    return r;
  r.degree = p.max_exp() - p.min_exp();
  const Scalar one(1);
  r.monic = abs(p.coeff(p.min_exp()) - one) <= tol && abs(p.coeff(p.max_exp()) - one) <= tol;
  if ((r.degree + 2) % 4 == 0)
    r.genus = (r.degree + 2) / 4;
  r.fibered_consistent = r.monic && r.genus.has_value();
  r.degree_matches_family = r.degree == 4 * n + 6;
  r.genus_matches_family = r.genus == n + 2;
  return r;
}

} // namespace talex::closed_form
