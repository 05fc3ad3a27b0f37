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
#include "talex/pretzel/context.hpp"

#include <memory>

namespace talex::closed_form {

using pretzel::PretzelContext;

/// The grouped form with S = s^n, T = t^n, multiplied by t^6. The quotients
/// (S - T^2)/(s - t^2) and (1 - S T^2)/(1 - s t^2) enter only through their
/// finite geometric sums, so nothing is ever divided by (s - t^2) or
/// (s t^2 - 1).
inline DeltaResult delta_prop32(const PretzelContext &c) {
  c.require_nondegenerate("delta_prop32");
  using P = LaurentPoly;
  const int n = c.n;
  const Scalar one(1);
  const Scalar &m = c.m, &s = c.s, &S = c.S, &H = c.H, &be = c.beta;
  const Scalar m2p1 = one + m * m;
  const Scalar one_minus_s2 = one - s * s;
  const Scalar eta_sum = c.eta1 + c.eta2;
  auto t = [](int k) { return P::monomial(Scalar(1), k); };
  auto cst = [](const Scalar &v) { return P::monomial(v, 0); };

  // (S/s) sum (t^2/s)^i, already multiplied by s/S.
  P first_sum, second_sum;
  for (int i = 0; i < n; ++i) {
    first_sum += P::monomial(pow(s, -i), 2 * i);
    second_sum += P::monomial(pow(s, i), 2 * i);
  }
  second_sum *= s / S;

  const P T2 = t(2 * n);
  const P inner1 = (cst(m * s) - cst(m * S) * T2 + P::monomial(m2p1 * one_minus_s2 * S, 1) * T2) * t(-2) *
                       (one / (m * one_minus_s2)) +
                   (cst(one) - P::monomial(s * S, 2) * T2) * t(-3) * (m2p1 * eta_sum / (H * m * be));
  const P inner2 = (cst(m2p1 * one_minus_s2 * S) - P::monomial(m * S, 1) + P::monomial(m * s, 1) * T2) * t(-3) *
                       (one / (m * one_minus_s2)) -
                   (cst(s * S) - t(2) * T2) * t(-3) * (m2p1 * eta_sum / (H * m * be));
  const P tail = t(-6) + t(4 * n) + (cst(one) + t(2)) * T2 * t(-4) * (one_minus_s2 * c.eta1 / (H * S * be));

  const P total = (first_sum * inner1 + second_sum * inner2 + tail) * t(6);
  DeltaResult out;
  auto [poly, unit] = normalize_unit(total, Real("1e-10"));
  out.poly = std::move(poly);
  out.unit = unit;
  out.method = Method::prop32;
  out.context = std::make_shared<const PretzelContext>(c);
  return out;
}

} // namespace talex::closed_form
