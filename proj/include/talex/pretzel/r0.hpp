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

#include "talex/pretzel/bivar_poly.hpp"

#include <stdexcept>

namespace talex::pretzel {

/// The polynomial r0(m, s) whose roots s parameterize the representations
/// of the n-th knot in the family. Assembled from its five m-degree groups
/// (m^8, m^6, m^4, m^2, m^0).
inline BivarPoly r0_polynomial(int n) {
  if (n < 1)
    throw std::invalid_argument("r0_polynomial requires n >= 1");
  using P = BivarPoly;
  const P s = P::s();
  const P one(1);

  // m^8 and m^0 groups.
  const P outer = (s - one) * (s + one).pow(2) * (P::s(2 * n) - P::s(2)) * P::s(2 * n + 2);
  // m^6 and m^2 groups (entering with a minus sign).
  const P six_two = P::s(6 * n + 3) + P::s_poly_desc({2, 1, -4, 1, 1, -1, -1}) * P::s(4 * n + 1) -
                    P::s_poly_desc({1, 1, -1, -1, 4, -1, -2}) * P::s(2 * n + 2) + P::s(6);
  // m^4 group.
  const P four = (P::s(2) + one) * P::s(6 * n + 2) + P::s_poly_desc({1, 2, -3, -2, 6, -4, -2}) * P::s(4 * n + 3) -
                 P::s_poly_desc({2, 4, -6, 2, 3, -2, -1}) * P::s(2 * n) + (P::s(2) + one) * P::s(5);

  return P::m(8) * outer - P::m(6) * six_two + P::m(4) * four - P::m(2) * six_two + outer;
}

} // namespace talex::pretzel
