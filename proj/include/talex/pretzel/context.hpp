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
#include "talex/pretzel/formulas.hpp"

#include <string>
#include <vector>

namespace talex::pretzel {

enum class Degeneracy : unsigned {
  m_zero = 1u << 0,
  s_zero = 1u << 1,
  s_one = 1u << 2,
  s_minus_one = 1u << 3,
  s_odd_power_minus_one = 1u << 4, // s^(2n+1) ~ -1
  alpha_zero = 1u << 5,
  beta_zero = 1u << 6,
  h_zero = 1u << 7,
};

inline constexpr Degeneracy kAllDegeneracies[] = {
    Degeneracy::m_zero,     Degeneracy::s_zero,    Degeneracy::s_one,     Degeneracy::s_minus_one,
    Degeneracy::s_odd_power_minus_one, Degeneracy::alpha_zero, Degeneracy::beta_zero, Degeneracy::h_zero};

inline const char *flag_name(Degeneracy d) {
  switch (d) {
  case Degeneracy::m_zero:
    return "m_zero";
  case Degeneracy::s_zero:
    return "s_zero";
  case Degeneracy::s_one:
    return "s_one";
  case Degeneracy::s_minus_one:
    return "s_minus_one";
  case Degeneracy::s_odd_power_minus_one:
    return "s_pow_2n1_minus_one";
  case Degeneracy::alpha_zero:
    return "alpha_zero";
  case Degeneracy::beta_zero:
    return "beta_zero";
  case Degeneracy::h_zero:
    return "H_zero";
  }
  return "?";
}

class DegeneracyFlags {
public:
  bool empty() const { return bits_ == 0; }
  bool has(Degeneracy d) const { return (bits_ & static_cast<unsigned>(d)) != 0; }
  void set(Degeneracy d) { bits_ |= static_cast<unsigned>(d); }
  friend bool operator==(const DegeneracyFlags &, const DegeneracyFlags &) = default;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (Degeneracy d : kAllDegeneracies)
      if (has(d))
        out.emplace_back(flag_name(d));
    return out;
  }

private:
  unsigned bits_ = 0;
};

/// Relative threshold below which a guarded quantity counts as zero.
inline const Real &degeneracy_tolerance() {
  static const Real tol("1e-10");
  return tol;
}

/// One parameter point (n, m, s) with every derived quantity the
/// representation and the closed forms need.
struct PretzelContext {
  int n = 1;
  Scalar m;
  Scalar s;
  Scalar alpha;
  Scalar beta;
  Scalar H;
  Scalar eta1;
  Scalar eta2;
  Scalar S; // s^n
  DegeneracyFlags degeneracy_flags;

  bool degenerate() const { return !degeneracy_flags.empty(); }

  void require_nondegenerate(const char *what) const {
    if (degenerate()) {
      std::string msg = std::string(what) + ": degenerate context (";
      for (const auto &f : degeneracy_flags.names())
        msg += f + " ";
      msg.back() = ')';
      throw DegenerateContext(msg);
    }
  }
};

inline std::pair<Scalar, Scalar> alpha_beta(int n, const Scalar &m, const Scalar &s) {
  return {alpha_expr(n, m, s), beta_expr(n, m, s)};
}

inline DegeneracyFlags degeneracy_flags(int n, const Scalar &m, const Scalar &s, const Scalar &alpha,
                                        const Scalar &beta, const Scalar &H) {
  const Real &tol = degeneracy_tolerance();
  const Magnitude am(abs(m)), as(abs(s));
  DegeneracyFlags f;
  if (abs(m) <= tol)
    f.set(Degeneracy::m_zero);
  if (abs(s) <= tol)
    f.set(Degeneracy::s_zero);
  if (abs(s - Scalar(1)) <= tol)
    f.set(Degeneracy::s_one);
  if (abs(s + Scalar(1)) <= tol)
    f.set(Degeneracy::s_minus_one);
  if (abs(pow(s, 2 * n + 1) + Scalar(1)) <= tol * std::max(Real(1), ipow(as, 2 * n + 1).v))
    f.set(Degeneracy::s_odd_power_minus_one);
  if (abs(alpha) <= tol * alpha_expr(n, am, as).v)
    f.set(Degeneracy::alpha_zero);
  if (abs(beta) <= tol * beta_expr(n, am, as).v)
    f.set(Degeneracy::beta_zero);
  if (abs(H) <= tol * h_expr(n, am, as).v)
    f.set(Degeneracy::h_zero);
  return f;
}

inline PretzelContext build_context(int n, const Scalar &m, const Scalar &s, bool strict = false) {
  if (n < 1)
    throw std::invalid_argument("build_context requires n >= 1");
  const unsigned bits = std::max({current_precision_bits(), m.precision_bits(), s.precision_bits()});
  PretzelContext c;
  c.n = n;
  c.m = m.rounded_to(bits);
  c.s = s.rounded_to(bits);
  std::tie(c.alpha, c.beta) = alpha_beta(n, c.m, c.s);
  c.H = h_expr(n, c.m, c.s);
  c.eta1 = eta1_expr(n, c.m, c.s, c.alpha, c.beta);
  c.eta2 = eta2_expr(n, c.m, c.s, c.alpha, c.beta);
  c.S = pow(c.s, n);
  c.degeneracy_flags = degeneracy_flags(n, c.m, c.s, c.alpha, c.beta, c.H);
  if (strict)
    c.require_nondegenerate("build_context");
  return c;
}

} // namespace talex::pretzel
