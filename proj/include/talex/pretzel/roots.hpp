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

#include "talex/pretzel/context.hpp"
#include "talex/pretzel/r0.hpp"
#include "talex/pretzel/root_solver.hpp"

#include <algorithm>
#include <optional>

namespace talex::pretzel {

struct SRoot {
  Scalar s;
  /// |r0(m, s)| / sum_i |c_i||s|^i
  Real residual;
  DegeneracyFlags flags;
};

/// Extra bits carried by the root solver beyond the requested precision so
/// that the clustered roots at s = +-1 still land inside the degeneracy
/// tolerance.
inline constexpr unsigned kRootGuardBits = 128;

/// Every root of r0(m, .) with its residual and degeneracy flags, sorted
/// by (Re s, Im s). Exactly vanishing low-order coefficients are reported
/// as flagged roots s = 0; the roots s = +-1 are found, not deflated.
inline std::vector<SRoot> solve_s_roots(int n, const Scalar &m, unsigned precision_bits) {
  if (m.is_zero())
    throw std::invalid_argument("solve_s_roots requires m != 0");
  const BivarPoly r0 = r0_polynomial(n);
  const std::vector<bool> zero_mask = r0.structural_zero_mask();
  std::size_t trailing_zeros = 0;
  while (trailing_zeros < zero_mask.size() && zero_mask[trailing_zeros])
    ++trailing_zeros;

  std::vector<Scalar> found;
  {
    PrecisionScope work(precision_bits + kRootGuardBits);
    std::vector<Scalar> coeffs = r0.specialize_m(m.rounded_to(precision_bits + kRootGuardBits));
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(trailing_zeros));
    Real biggest(0);
    for (const auto &c : coeffs)
      biggest = std::max(biggest, Real(abs(c)));
    // Leading coefficients that vanish for this particular m send roots to
    // infinity; drop them.
    const Real cutoff = biggest * pow2(-static_cast<int>(precision_bits + kRootGuardBits) + 8);
    while (!coeffs.empty() && abs(coeffs.back()) <= cutoff)
      coeffs.pop_back();
    found = aberth_roots(coeffs);
  }

  PrecisionScope scope(precision_bits);
  const std::vector<Scalar> coeffs = r0.specialize_m(m.rounded_to(precision_bits));
  const Real bound = pow2(-static_cast<int>(precision_bits) / 2);
  const Scalar mm = m.rounded_to(precision_bits);

  std::vector<SRoot> out;
  for (std::size_t i = 0; i < trailing_zeros; ++i)
    found.emplace_back(0);
  for (const Scalar &z : found) {
    SRoot r;
    r.s = z.rounded_to(precision_bits);
    r.residual = r.s.is_zero() ? Real(0) : backward_error(coeffs, r.s);
    if (r.residual > bound)
      throw NonConvergence("root residual " + to_decimal(r.residual, 6) + " above bound");
    auto [alpha, beta] = alpha_beta(n, mm, r.s);
    r.flags = degeneracy_flags(n, mm, r.s, alpha, beta, h_expr(n, mm, r.s));
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const SRoot &a, const SRoot &b) {
    if (a.s.re() != b.s.re())
      return a.s.re() < b.s.re();
    return a.s.im() < b.s.im();
  });
  return out;
}

/// Index of the nondegenerate root with largest |Im s|, if any.
inline std::optional<std::size_t> default_root_index(const std::vector<SRoot> &roots) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].flags.empty())
      continue;
    if (!best || boost::multiprecision::abs(roots[i].s.im()) > boost::multiprecision::abs(roots[*best].s.im()))
      best = i;
  }
  return best;
}

} // namespace talex::pretzel
