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

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace talex::pretzel {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in s and m with exact integer coefficients, keyed by
/// (exponent of s, exponent of m).
class BivarPoly {
public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, BigInt>;

  BivarPoly() = default;
  BivarPoly(long long c) {
    if (c != 0)
      terms_.emplace(Key{0, 0}, BigInt(c));
  }

  static BivarPoly s(int k = 1) { return term(1, k, 0); }
  static BivarPoly m(int k = 1) { return term(1, 0, k); }
  static BivarPoly term(const BigInt &c, int s_exp, int m_exp) {
    BivarPoly p;
    if (c != 0)
      p.terms_.emplace(Key{s_exp, m_exp}, c);
    return p;
  }
  /// Integer polynomial in s given highest-degree coefficient first.
  static BivarPoly s_poly_desc(std::initializer_list<long long> coeffs) {
    BivarPoly p;
    int deg = static_cast<int>(coeffs.size()) - 1;
    for (long long c : coeffs)
      p.add(Key{deg--, 0}, BigInt(c));
    return p;
  }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coeff(int s_exp, int m_exp) const {
    auto it = terms_.find(Key{s_exp, m_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  int degree_s() const {
    int d = -1;
    for (const auto &[k, c] : terms_)
      d = std::max(d, k.first);
    return d;
  }
  int degree_m() const {
    int d = -1;
    for (const auto &[k, c] : terms_)
      d = std::max(d, k.second);
    return d;
  }

  BivarPoly &operator+=(const BivarPoly &o) {
    for (const auto &[k, c] : o.terms_)
      add(k, c);
    return *this;
  }
  BivarPoly &operator-=(const BivarPoly &o) {
    for (const auto &[k, c] : o.terms_)
      add(k, -c);
    return *this;
  }
  friend BivarPoly operator+(BivarPoly a, const BivarPoly &b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly &b) { return a -= b; }
  friend BivarPoly operator-(const BivarPoly &a) { return BivarPoly() - a; }
  friend BivarPoly operator*(const BivarPoly &a, const BivarPoly &b) {
    BivarPoly r;
    for (const auto &[ka, ca] : a.terms_)
      for (const auto &[kb, cb] : b.terms_)
        r.add(Key{ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }
  friend bool operator==(const BivarPoly &, const BivarPoly &) = default;

  BivarPoly pow(unsigned k) const {
    BivarPoly acc(1);
    for (unsigned i = 0; i < k; ++i)
      acc = acc * *this;
    return acc;
  }

  /// m^deg * p(m^-1, s); requires deg >= degree_m().
  BivarPoly mirror_m(int deg) const {
    if (deg < degree_m())
      throw std::invalid_argument("mirror degree below m-degree");
    BivarPoly r;
    for (const auto &[k, c] : terms_)
      r.add(Key{k.first, deg - k.second}, c);
    return r;
  }

  /// Coefficients in s (ascending) after substituting m.
  std::vector<Scalar> specialize_m(const Scalar &mv) const {
    std::vector<Scalar> out(std::max(0, degree_s() + 1), Scalar(0));
    std::map<int, Scalar> mpow;
    for (const auto &[k, c] : terms_) {
      auto it = mpow.find(k.second);
      if (it == mpow.end())
        it = mpow.emplace(k.second, talex::pow(mv, k.second)).first;
      out[k.first] += Scalar(Real(c)) * it->second;
    }
    return out;
  }

  /// s-exponents whose coefficient (a polynomial in m) is identically zero.
  std::vector<bool> structural_zero_mask() const {
    std::vector<bool> zero(std::max(0, degree_s() + 1), true);
    for (const auto &[k, c] : terms_)
      zero[k.first] = false;
    return zero;
  }

  Scalar evaluate(const Scalar &mv, const Scalar &sv) const {
    Scalar acc(0);
    auto cs = specialize_m(mv);
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
      acc = acc * sv + cs[i];
    return acc;
  }

  /// Division by a polynomial in s alone that is monic in s. Returns
  /// (quotient, remainder) with deg_s(remainder) < deg_s(divisor).
  std::pair<BivarPoly, BivarPoly> divide_by_monic_s(const BivarPoly &divisor) const {
    const int dd = divisor.degree_s();
    if (divisor.degree_m() != 0 || divisor.coeff(dd, 0) != 1)
      throw std::invalid_argument("divisor must be monic in s with no m dependence");
    BivarPoly rem = *this;
    BivarPoly quot;
    for (int e = rem.degree_s(); e >= dd; --e) {
      // The s^e slice of the remainder, a polynomial in m.
      std::vector<std::pair<int, BigInt>> slice;
      for (const auto &[k, c] : rem.terms_)
        if (k.first == e)
          slice.emplace_back(k.second, c);
      for (const auto &[mexp, c] : slice) {
        BivarPoly q = term(c, e - dd, mexp);
        quot += q;
        rem -= q * divisor;
      }
    }
    return {quot, rem};
  }

private:
  void add(Key k, const BigInt &c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Terms terms_;
};

} // namespace talex::pretzel
