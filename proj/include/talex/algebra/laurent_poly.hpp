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
#include "talex/errors.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace talex {

/// Sparse Laurent polynomial in one variable with Scalar coefficients.
///
/// Terms whose magnitude drops below 2^-(precision_bits-8) times the
/// polynomial's sup-norm are swept to structural zero after every
/// arithmetic operation, so `min_exp()`/`max_exp()` track the numerical
/// support rather than rounding noise.
class LaurentPoly {
public:
  using Terms = std::map<int, Scalar>;

  LaurentPoly() = default;
  LaurentPoly(Scalar c) {
    if (!c.is_zero())
      terms_.emplace(0, std::move(c));
  }
  LaurentPoly(std::initializer_list<std::pair<const int, Scalar>> init) : terms_(init) { sweep(); }
  explicit LaurentPoly(Terms terms) : terms_(std::move(terms)) { sweep(); }

  static LaurentPoly monomial(Scalar c, int exp) {
    LaurentPoly p;
    if (!c.is_zero())
      p.terms_.emplace(exp, std::move(c));
    return p;
  }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Scalar coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Real norm_inf() const {
    Real best(0);
    for (const auto &[e, c] : terms_) {
      Real a = abs(c);
      if (a > best)
        best = a;
    }
    return best;
  }

  unsigned precision_bits() const {
    unsigned bits = 0;
    for (const auto &[e, c] : terms_)
      bits = std::max(bits, c.precision_bits());
    return bits == 0 ? current_precision_bits() : bits;
  }

  Scalar evaluate(const Scalar &t) const {
    Scalar acc(0);
    for (const auto &[e, c] : terms_)
      acc += c * pow(t, e);
    return acc;
  }

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto &[e, c] : terms_)
      r.terms_.emplace(e + k, c);
    return r;
  }

  LaurentPoly &operator+=(const LaurentPoly &o) {
    for (const auto &[e, c] : o.terms_)
      terms_[e] += c;
    sweep();
    return *this;
  }
  LaurentPoly &operator-=(const LaurentPoly &o) {
    for (const auto &[e, c] : o.terms_)
      terms_[e] -= c;
    sweep();
    return *this;
  }
  LaurentPoly &operator*=(const Scalar &k) {
    for (auto &[e, c] : terms_)
      c *= k;
    sweep();
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto &[e, c] : a.terms_)
      c = -c;
    return a;
  }
  friend LaurentPoly operator*(LaurentPoly a, const Scalar &k) { return a *= k; }
  friend LaurentPoly operator*(const Scalar &k, LaurentPoly a) { return a *= k; }

  friend LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q) {
    LaurentPoly r;
    for (const auto &[ep, cp] : p.terms_)
      for (const auto &[eq, cq] : q.terms_)
        r.terms_[ep + eq] += cp * cq;
    r.sweep();
    return r;
  }
  LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }

  /// Drop terms below the relative threshold; exact zeros always go.
  void sweep() {
    if (terms_.empty())
      return;
    Real cutoff = norm_inf() * pow2(-static_cast<int>(precision_bits()) + 8);
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero() || abs(it->second) < cutoff)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

private:
  Terms terms_;
};

inline LaurentPoly laurent_multiply(const LaurentPoly &p, const LaurentPoly &q) { return p * q; }

struct DivisionResult {
  LaurentPoly quotient;
  LaurentPoly remainder;
  /// ||remainder||_inf / ||numerator||_inf (0 for a zero numerator).
  Real relative_remainder;
};

/// Long division from the top exponent down. The quotient covers exponents
/// [num.min - den.min, num.max - den.max]; whatever cannot be absorbed there
/// is left in the remainder.
inline DivisionResult laurent_divide(const LaurentPoly &num, const LaurentPoly &den) {
  if (den.is_zero())
    throw SingularDenominator("division by the zero Laurent polynomial");
  DivisionResult out;
  if (num.is_zero()) {
    out.relative_remainder = Real(0);
    return out;
  }
  const int dmax = den.max_exp();
  const int dmin = den.min_exp();
  const Scalar lead = den.coeff(dmax);
  std::map<int, Scalar> rem(num.terms().begin(), num.terms().end());
  std::map<int, Scalar> quot;
  for (int k = num.max_exp() - dmax; k >= num.min_exp() - dmin; --k) {
    auto it = rem.find(k + dmax);
    if (it == rem.end())
      continue;
    Scalar c = it->second / lead;
    for (const auto &[e, d] : den.terms())
      rem[e + k] -= c * d;
    rem.erase(k + dmax);
    quot.emplace(k, std::move(c));
  }
  out.quotient = LaurentPoly(std::move(quot));
  Real numn = num.norm_inf();
  // The remainder is not swept: it is the quantity being measured.
  Real remn(0);
  for (const auto &[e, c] : rem)
    remn = std::max(remn, Real(abs(c)));
  out.remainder = LaurentPoly(LaurentPoly::Terms(rem.begin(), rem.end()));
  out.relative_remainder = remn / numn;
  return out;
}

/// Exact division; throws InexactDivision when
/// ||num - q*den||_inf > tol * ||num||_inf.
inline LaurentPoly laurent_divide_exact(const LaurentPoly &num, const LaurentPoly &den, const Real &tol) {
  DivisionResult r = laurent_divide(num, den);
  if (r.relative_remainder > tol)
    throw InexactDivision("Laurent division remainder " + to_decimal(r.relative_remainder, 6) +
                          " exceeds tolerance " + to_decimal(tol, 6));
  return std::move(r.quotient);
}

/// Max coefficientwise |p_i - q_i| / max(1, |p_i|, |q_i|).
inline Real max_coefficient_deviation(const LaurentPoly &p, const LaurentPoly &q) {
  Real worst(0);
  auto visit = [&](int e) {
    Scalar a = p.coeff(e), b = q.coeff(e);
    Real scale = std::max({Real(1), Real(abs(a)), Real(abs(b))});
    Real d = abs(a - b) / scale;
    if (d > worst)
      worst = d;
  };
  for (const auto &[e, c] : p.terms())
    visit(e);
  for (const auto &[e, c] : q.terms())
    if (p.terms().find(e) == p.terms().end())
      visit(e);
  return worst;
}

} // namespace talex
