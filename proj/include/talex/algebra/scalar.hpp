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

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ios>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace talex {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 256;

// boost tracks mpfr precision in decimal digits; this is the inverse of its
// digits -> bits rule, rounded so the resulting mantissa is at least `bits`.
inline unsigned bits_to_digits10(unsigned bits) {
  return std::max(1u, static_cast<unsigned>((static_cast<unsigned long>(bits) * 301) / 1000));
}

inline unsigned precision_bits_of(const Real &x) {
  return static_cast<unsigned>(mpfr_get_prec(x.backend().data()));
}

inline Real with_precision(const Real &x, unsigned bits) {
  Real r;
  r.precision(bits_to_digits10(bits));
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

// Every Real/Scalar created while the scope is alive (literals, default
// construction, string parsing) gets this precision. Arithmetic between
// operands of differing precision yields the larger one.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    if (bits < 64)
      throw std::invalid_argument("precision_bits must be >= 64");
    Real::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope &) = delete;
  PrecisionScope &operator=(const PrecisionScope &) = delete;

private:
  unsigned saved_;
};

inline unsigned current_precision_bits() {
  return precision_bits_of(Real(0));
}

/// 2^-k at the current default precision.
inline Real pow2(int k) {
  Real r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), k, MPFR_RNDN);
  return r;
}

/// High-precision complex number.
class Scalar {
public:
  Scalar() : re_(0), im_(0) {}
  Scalar(int v) : re_(v), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}
  Scalar(long long v) : re_(v), im_(0) {}
  Scalar(Real re) : re_(std::move(re)), im_(0) {}
  Scalar(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar from_strings(std::string_view re, std::string_view im) {
    return Scalar(Real(std::string(re)), Real(std::string(im)));
  }

  const Real &re() const { return re_; }
  const Real &im() const { return im_; }

  unsigned precision_bits() const {
    return std::max(precision_bits_of(re_), precision_bits_of(im_));
  }

  Scalar rounded_to(unsigned bits) const {
    return Scalar(with_precision(re_, bits), with_precision(im_, bits));
  }

  Scalar &operator+=(const Scalar &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar &operator-=(const Scalar &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar &operator*=(const Scalar &o) {
    Real r = re_ * o.re_ - im_ * o.im_;
    Real i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar &operator/=(const Scalar &o) {
    // Smith's algorithm keeps intermediate magnitudes bounded.
    using boost::multiprecision::abs;
    if (o.re_ == 0 && o.im_ == 0)
      throw std::domain_error("Scalar division by zero");
    const unsigned bits = std::max(precision_bits(), o.precision_bits());
    const Real ore = with_precision(o.re_, bits), oim = with_precision(o.im_, bits);
    Real r, i;
    if (abs(ore) >= abs(oim)) {
      Real q = oim / ore;
      Real d = ore + oim * q;
      r = (re_ + im_ * q) / d;
      i = (im_ - re_ * q) / d;
    } else {
      Real q = ore / oim;
      Real d = ore * q + oim;
      r = (re_ * q + im_) / d;
      i = (im_ * q - re_) / d;
    }
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
  friend Scalar operator-(const Scalar &a) { return Scalar(Real(-a.re_), Real(-a.im_)); }

  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  bool is_zero() const { return re_ == 0 && im_ == 0; }

private:
  Real re_;
  Real im_;
};

inline Real abs(const Scalar &z) {
  return boost::multiprecision::hypot(z.re(), z.im());
}

inline Real norm(const Scalar &z) { return z.re() * z.re() + z.im() * z.im(); }

inline Scalar conj(const Scalar &z) { return Scalar(z.re(), Real(-z.im())); }

inline Scalar pow(Scalar base, long long e) {
  if (e < 0)
    return Scalar(1) / pow(std::move(base), -e);
  Scalar acc(1);
  while (e > 0) {
    if (e & 1)
      acc *= base;
    e >>= 1;
    if (e > 0)
      base *= base;
  }
  return acc;
}

/// e^{i theta} at the current precision.
inline Scalar polar(const Real &r, const Real &theta) {
  return Scalar(Real(r * boost::multiprecision::cos(theta)), Real(r * boost::multiprecision::sin(theta)));
}

/// Decimal string with `digits` significant digits, scientific notation.
inline std::string to_decimal(const Real &x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

/// Number of significant decimal digits used when printing at `bits`.
inline int output_digits(unsigned bits) { return std::max(1, static_cast<int>(bits * 3 / 10)); }

inline double to_double(const Real &x) { return x.convert_to<double>(); }

/// log10 of a nonnegative magnitude; -infinity for exact zero.
inline double log10_magnitude(const Real &x) {
  if (x == 0)
    return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  double mant = mpfr_get_d_2exp(&exp2, x.backend().data(), MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

} // namespace talex
