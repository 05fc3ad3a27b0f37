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
#include "talex/errors.hpp"
#include "talex/fox/derivative.hpp"
#include "talex/fox/phi.hpp"

#include <vector>

namespace talex::fox {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Cofactor expansion along the first row; sizes here never exceed 4.
inline LaurentPoly determinant(const PolyMatrix &m) {
  const std::size_t n = m.size();
  if (n == 0)
    return LaurentPoly(Scalar(1));
  if (n == 1)
    return m[0][0];
  if (n == 2)
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  LaurentPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero())
      continue;
    PolyMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col)
          row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][col] * determinant(minor);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

/// Blocks A_{i,j} = Phi(d r_i / d x_j), assembled with column block k removed.
inline PolyMatrix alexander_matrix(const Presentation &p, const Representation &rho, int remove_k) {
  const int rows = static_cast<int>(p.relators.size());
  PolyMatrix a(2 * rows, std::vector<LaurentPoly>(2 * (p.num_generators - 1)));
  for (int i = 0; i < rows; ++i) {
    int out_col = 0;
    for (int j = 0; j < p.num_generators; ++j) {
      if (j == remove_k)
        continue;
      PolyMat block = phi_map(fox_derivative_of_relator(p.relators[i], j), rho, p.abelian_exponents);
      a[2 * i][2 * out_col] = block.a11;
      a[2 * i][2 * out_col + 1] = block.a12;
      a[2 * i + 1][2 * out_col] = block.a21;
      a[2 * i + 1][2 * out_col + 1] = block.a22;
      ++out_col;
    }
  }
  return a;
}

/// det Phi(x_k - 1).
inline LaurentPoly generator_denominator(const Presentation &p, const Representation &rho, int k) {
  PolyMat m = monomial_matrix(rho.images.at(k), static_cast<int>(p.abelian_exponents.at(k))) - PolyMat::identity();
  return mat2_determinant(m);
}

struct WadaQuotient {
  LaurentPoly numerator;
  LaurentPoly denominator;
  DivisionResult division;
};

/// The raw quotient det A_{rho,k} / det Phi(x_k - 1), without the exactness
/// check or normalization.
inline WadaQuotient wada_quotient(const Presentation &p, const Representation &rho, int remove_k, const Real &tol) {
  p.validate();
  if (remove_k < 0 || remove_k >= p.num_generators)
    throw std::invalid_argument("remove_k out of range");
  WadaQuotient q;
  q.denominator = generator_denominator(p, rho, remove_k);
  if (q.denominator.norm_inf() <= tol)
    throw SingularDenominator("det Phi(x_k - 1) vanishes; remove another generator");
  q.numerator = determinant(alexander_matrix(p, rho, remove_k));
  q.division = laurent_divide(q.numerator, q.denominator);
  return q;
}

/// Normalized result of a quotient, whatever its remainder.
/// Terms below ||q||_inf 2^{-bits/2} are rounding debris and are dropped
/// before the support is shifted.
inline DeltaResult normalized_quotient(const WadaQuotient &q) {
  DeltaResult out;
  const Real cutoff = q.division.quotient.norm_inf() * pow2(-static_cast<int>(current_precision_bits()) / 2);
  LaurentPoly::Terms kept;
  for (const auto &[e, c] : q.division.quotient.terms())
    if (abs(c) > cutoff)
      kept.emplace(e, c);
  auto [poly, unit] = normalize_unit(LaurentPoly(std::move(kept)), Real("1e-10"));
  out.poly = std::move(poly);
  out.unit = unit;
  out.method = Method::fox;
  out.division_remainder = q.division.relative_remainder;
  return out;
}

/// Wada's twisted Alexander polynomial, normalized to min exponent 0 and
/// constant term +1 where the raw constant is -1.
inline DeltaResult wada_polynomial(const Presentation &p, const Representation &rho, int remove_k, const Real &tol) {
  WadaQuotient q = wada_quotient(p, rho, remove_k, tol);
  if (q.division.relative_remainder > tol)
    throw InexactDivision("det A / det Phi(x_k - 1) leaves relative remainder " +
                          to_decimal(q.division.relative_remainder, 6));
  return normalized_quotient(q);
}

} // namespace talex::fox
