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

#include "talex/errors.hpp"
#include "talex/fox/presentation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace talex::fox {

/// Generator exponents of the map to <t>: the integer kernel of the
/// abelianized relator matrix, scaled so the meridian goes to t.
inline AbelianExponents infer_abelianization(const Presentation &p, int meridian) {
  using boost::multiprecision::cpp_rational;
  const int g = p.num_generators;
  if (meridian < 0 || meridian >= g)
    throw std::invalid_argument("meridian index out of range");

  std::vector<std::vector<cpp_rational>> rows;
  for (const Relator &r : p.relators) {
    std::vector<cpp_rational> row(g);
    for (int j = 0; j < g; ++j)
      row[j] = r.exponent_sum(j);
    rows.push_back(std::move(row));
  }

  // Reduced row echelon form.
  std::vector<int> pivot_cols;
  std::size_t rank = 0;
  for (int col = 0; col < g && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[rank], rows[piv]);
    cpp_rational lead = rows[rank][col];
    for (auto &v : rows[rank])
      v /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0)
        continue;
      cpp_rational f = rows[i][col];
      for (int k = 0; k < g; ++k)
        rows[i][k] -= f * rows[rank][k];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  if (g - static_cast<int>(rank) != 1)
    throw AmbiguousAbelianization("abelianized relator kernel has rank " + std::to_string(g - rank));

  int free_col = 0;
  for (; free_col < g; ++free_col)
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) == pivot_cols.end())
      break;

  std::vector<cpp_rational> kernel(g, 0);
  kernel[free_col] = 1;
  for (std::size_t i = 0; i < rank; ++i)
    kernel[pivot_cols[i]] = -rows[i][free_col];

  if (kernel[meridian] == 0)
    throw AmbiguousAbelianization("meridian maps trivially under the abelianization");
  cpp_rational scale = kernel[meridian];
  AbelianExponents out(g);
  for (int j = 0; j < g; ++j) {
    cpp_rational v = kernel[j] / scale;
    if (boost::multiprecision::denominator(v) != 1)
      throw AmbiguousAbelianization("abelianization is not integral with this meridian");
    out[j] = static_cast<long long>(boost::multiprecision::numerator(v));
  }
  return out;
}

} // namespace talex::fox
