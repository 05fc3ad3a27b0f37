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

#include "talex/algebra/laurent_poly.hpp"
#include "talex/algebra/scalar.hpp"

#include <concepts>
#include <stdexcept>

namespace talex {

/// 2x2 matrix over a commutative ring: Scalar for representation matrices,
/// LaurentPoly for images under the twisted Fox map.
template <class T>
struct Mat2 {
  T a11{}, a12{}, a21{}, a22{};

  static Mat2 identity() { return {T(Scalar(1)), T(Scalar(0)), T(Scalar(0)), T(Scalar(1))}; }
  static Mat2 zero() { return {T(Scalar(0)), T(Scalar(0)), T(Scalar(0)), T(Scalar(0))}; }

  Mat2 &operator+=(const Mat2 &o) {
    a11 += o.a11;
    a12 += o.a12;
    a21 += o.a21;
    a22 += o.a22;
    return *this;
  }
  Mat2 &operator-=(const Mat2 &o) {
    a11 -= o.a11;
    a12 -= o.a12;
    a21 -= o.a21;
    a22 -= o.a22;
    return *this;
  }

  friend Mat2 operator+(Mat2 a, const Mat2 &b) { return a += b; }
  friend Mat2 operator-(Mat2 a, const Mat2 &b) { return a -= b; }
  friend Mat2 operator-(const Mat2 &a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }

  friend Mat2 operator*(const Mat2 &x, const Mat2 &y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  Mat2 &operator*=(const Mat2 &o) { return *this = *this * o; }

  friend Mat2 operator*(const Scalar &k, const Mat2 &x) {
    return {x.a11 * k, x.a12 * k, x.a21 * k, x.a22 * k};
  }
};

using ScalarMat = Mat2<Scalar>;
using PolyMat = Mat2<LaurentPoly>;

template <class T>
T mat2_determinant(const Mat2<T> &m) {
  return m.a11 * m.a22 - m.a12 * m.a21;
}

template <class T>
T trace(const Mat2<T> &m) {
  return m.a11 + m.a22;
}

inline ScalarMat inverse(const ScalarMat &m) {
  Scalar d = mat2_determinant(m);
  if (d.is_zero())
    throw std::domain_error("singular 2x2 matrix");
  Scalar inv = Scalar(1) / d;
  return {m.a22 * inv, -m.a12 * inv, -m.a21 * inv, m.a11 * inv};
}

inline ScalarMat pow(ScalarMat base, long long e) {
  if (e < 0) {
    base = inverse(base);
    e = -e;
  }
  ScalarMat acc = ScalarMat::identity();
  while (e > 0) {
    if (e & 1)
      acc *= base;
    e >>= 1;
    if (e > 0)
      base *= base;
  }
  return acc;
}

inline Real norm_inf(const ScalarMat &m) {
  return std::max({Real(abs(m.a11)), Real(abs(m.a12)), Real(abs(m.a21)), Real(abs(m.a22))});
}

inline Real norm_inf(const PolyMat &m) {
  return std::max({m.a11.norm_inf(), m.a12.norm_inf(), m.a21.norm_inf(), m.a22.norm_inf()});
}

/// Embed a scalar matrix as c * t^k.
inline PolyMat monomial_matrix(const ScalarMat &m, int k) {
  return {LaurentPoly::monomial(m.a11, k), LaurentPoly::monomial(m.a12, k), LaurentPoly::monomial(m.a21, k),
          LaurentPoly::monomial(m.a22, k)};
}

/// Entrywise evaluation at t.
inline ScalarMat evaluate(const PolyMat &m, const Scalar &t) {
  return {m.a11.evaluate(t), m.a12.evaluate(t), m.a21.evaluate(t), m.a22.evaluate(t)};
}

/// Max entrywise coefficient deviation between two polynomial matrices.
inline Real max_coefficient_deviation(const PolyMat &x, const PolyMat &y) {
  return std::max({max_coefficient_deviation(x.a11, y.a11), max_coefficient_deviation(x.a12, y.a12),
                   max_coefficient_deviation(x.a21, y.a21), max_coefficient_deviation(x.a22, y.a22)});
}

} // namespace talex
