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

#include "talex/algebra/scalar.hpp"

namespace talex::pretzel {

/// Nonnegative magnitude arithmetic: subtraction adds. Evaluating a
/// polynomial expression over Magnitude at (|m|, |s|) yields the sum of the
/// absolute values of its terms, the natural scale for "is this ~ 0" tests.
struct Magnitude {
  Real v;
  Magnitude() : v(0) {}
  Magnitude(int c) : v(c < 0 ? -c : c) {}
  explicit Magnitude(Real x) : v(std::move(x)) {}

  friend Magnitude operator+(const Magnitude &a, const Magnitude &b) { return Magnitude(Real(a.v + b.v)); }
  friend Magnitude operator-(const Magnitude &a, const Magnitude &b) { return Magnitude(Real(a.v + b.v)); }
  friend Magnitude operator-(const Magnitude &a) { return a; }
  friend Magnitude operator*(const Magnitude &a, const Magnitude &b) { return Magnitude(Real(a.v * b.v)); }
};

inline Magnitude pow(Magnitude b, long long e) {
  Magnitude acc(1);
  for (long long i = 0; i < e; ++i)
    acc = acc * b;
  return acc;
}

template <class F>
F ipow(const F &x, long long k) {
  using talex::pow;
  return pow(x, k);
}

// Defining data of the representation family, as polynomial expressions in
// (m, s). Each is a template so the same text evaluates values (Scalar) and
// term-magnitude sums (Magnitude).

template <class F>
F alpha_expr(int n, const F &m, const F &s) {
  const F one(1), two(2), three(3);
  const F s2n = ipow(s, 2 * n);
  const F braces = -ipow(m, 6) * (s - one) * s * s * (ipow(s, 2 * n + 1) + one) +
                   ipow(m, 4) * (ipow(s, 2 * n + 2) * (ipow(s, 4) - two * s * s + three * s - one) + ipow(s, 4) -
                                 three * ipow(s, 3) + two * s * s - one) -
                   m * m * s * (s2n * (two * ipow(s, 3) - s * s + one) - s * (ipow(s, 3) - s + two)) +
                   s * s * (s2n - s * s);
  return (s * s - one) * s2n * braces;
}

template <class F>
F beta_expr(int n, const F &m, const F &s) {
  const F one(1);
  const F s2n = ipow(s, 2 * n);
  const F s3 = ipow(s, 3);
  return ipow(m, 7) * ipow(s, 2 * n + 2) * (s * s - one) * (s3 + one) -
         ipow(m, 5) * s3 *
             (ipow(s, 4 * n) * (s3 - s * s + one) + ipow(s, 2 * n - 2) * (s - one) * (s3 + s + one) * (s3 + s * s + one) -
              (s3 - s + one)) +
         ipow(m, 3) * s * s * (s3 + one) * (s2n - one) * (s2n + s * s) - m * s3 * (s2n - s * s) * (s2n + s);
}

template <class F>
F h_expr(int n, const F &m, const F &s) {
  const F one(1);
  return one - m * m * s + m * m * ipow(s, 2 * n + 1) - ipow(s, 2 * n + 2);
}

template <class F>
F eta1_expr(int n, const F &m, const F &s, const F &alpha, const F &beta) {
  const F s2n = ipow(s, 2 * n);
  return m * alpha - m * ipow(s, 2 * n + 1) * alpha + s2n * beta + m * m * s2n * beta;
}

template <class F>
F eta2_expr(int n, const F &m, const F &s, const F &alpha, const F &beta) {
  return -m * s * alpha + m * ipow(s, 2 * n + 1) * alpha - ipow(s, 2 * n) * beta - ipow(s, 2 * n + 1) * beta;
}

template <class F>
F r1_expr(int n, const F &m, const F &s, const F &alpha, const F &beta) {
  const F one(1);
  const F m2 = m * m;
  return -alpha * alpha * m * s * (m2 * ipow(s, 2 * n + 2) - m2 - ipow(s, 2 * n + 1) + s) +
         alpha * beta * (m2 - one) * (m2 + one) * ipow(s, 2 * n + 1) * (s + one) +
         beta * beta * m * ipow(s, 2 * n) * (m2 * ipow(s, 2 * n + 1) - m2 * s - ipow(s, 2 * n + 2) + one);
}

} // namespace talex::pretzel
