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

#include "talex/algebra/mat2.hpp"
#include "talex/pretzel/holonomy.hpp"

namespace talex::closed_form {

using pretzel::PretzelContext;

/// det Phi(c - 1) in closed form: 1 - tr(rho(xb)) t^{2n+1} + t^{4n+2}, with
/// the trace written through H and eta_2.
inline LaurentPoly denominator_closed_form(const PretzelContext &c) {
  c.require_nondegenerate("denominator_closed_form");
  const Scalar one(1);
  const Scalar &m = c.m;
  const Scalar middle = (m * m + one) * (c.s - one) * c.eta2 / (m * c.S * c.H * c.beta);
  return LaurentPoly({{0, one}, {2 * c.n + 1, -middle}, {4 * c.n + 2, one}});
}

/// Phi-image of d/da of the two-generator relator, term by term:
///   sum_{i=1}^{n-1} t^{2(i-1)} W^{i-1} (I + t^{2n+2} AXB)
///   + t^{4n+1} XBXBA^-1 + t^{2n-1} XB W^-1 + t^-3 XB W^-1 (AXB)^-1
/// with W = AXBA(XB)^-1.
inline PolyMat derivative_expansion_eq2(const PretzelContext &c) {
  const pretzel::HolonomyMatrices h = pretzel::holonomy_matrices(c);
  const int n = c.n;
  const ScalarMat XB = h.X * h.B;
  const ScalarMat AXB = h.A * XB;
  const ScalarMat W = AXB * h.A * inverse(XB);
  const ScalarMat Winv = inverse(W);
  const ScalarMat I = ScalarMat::identity();

  PolyMat out = PolyMat::zero();
  ScalarMat Wpow = I;
  for (int i = 1; i <= n - 1; ++i) {
    out += monomial_matrix(Wpow, 2 * (i - 1));
    out += monomial_matrix(Wpow * AXB, 2 * (i - 1) + 2 * (n + 1));
    Wpow *= W;
  }
  out += monomial_matrix(XB * XB * inverse(h.A), 4 * n + 1);
  out += monomial_matrix(XB * Winv, 2 * n - 1);
  out += monomial_matrix(XB * Winv * inverse(AXB), -3);
  return out;
}

struct Zeta {
  Scalar zeta1;
  Scalar zeta2;
};

inline Zeta zeta_vanishing(const PretzelContext &c) {
  const Scalar one(1);
  const Scalar &m = c.m, &s = c.s, &S = c.S, &H = c.H, &al = c.alpha, &be = c.beta, &e1 = c.eta1, &e2 = c.eta2;
  const Scalar S2 = S * S;
  const Scalar m2 = m * m;
  Zeta z;
  z.zeta1 = m * (m2 + one) * s * (s + one) * (H * S2 * be - s * (S2 - one) * e1 - (s * S2 - one) * e2);
  z.zeta2 = H * m2 * s * (m * al - m * s * s * al + s * be + S2 * be) -
            (s * s - one) * (m2 * e1 + m2 * pow(s, 3) * e1 + s * e2 + m2 * s * e2);
  return z;
}

/// m {(m^2 (s^2 - s + 1) - s)(s^3 S^2 + 1) - H s (s - 1)}, the cofactor with
/// zeta_2 = cofactor * r0.
inline Scalar zeta2_cofactor(const PretzelContext &c) {
  const Scalar one(1);
  const Scalar &m = c.m, &s = c.s;
  return m * ((m * m * (s * s - s + one) - s) * (pow(s, 3) * c.S * c.S + one) - c.H * s * (s - one));
}

} // namespace talex::closed_form
