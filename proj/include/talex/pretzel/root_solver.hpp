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

#include <boost/math/constants/constants.hpp>

#include <vector>

namespace talex::pretzel {

struct AberthOptions {
  int max_iterations = 4000;
};

/// sum_i |c_i| |z|^i
inline Real absolute_evaluation(const std::vector<Scalar> &coeffs, const Real &r) {
  Real acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * r + abs(*it);
  return acc;
}

/// Horner evaluation of p and p'.
inline std::pair<Scalar, Scalar> evaluate_with_derivative(const std::vector<Scalar> &coeffs, const Scalar &z) {
  Scalar p(0), dp(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

/// Relative backward error |p(z)| / sum |c_i||z|^i.
inline Real backward_error(const std::vector<Scalar> &coeffs, const Scalar &z) {
  Scalar p(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    p = p * z + *it;
  Real scale = absolute_evaluation(coeffs, abs(z));
  return scale == 0 ? Real(0) : Real(abs(p) / scale);
}

/// All roots of sum_i coeffs[i] z^i by Aberth-Ehrlich simultaneous
/// iteration, at the current default precision. The leading and constant
/// coefficients must be nonzero. A root is frozen once its backward error
/// falls to a few ulps; multiple roots are reached linearly and therefore
/// only to about eps^(1/multiplicity).
inline std::vector<Scalar> aberth_roots(const std::vector<Scalar> &coeffs, const AberthOptions &opt = {}) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1)
    return {};
  if (coeffs.back().is_zero() || coeffs.front().is_zero())
    throw std::invalid_argument("aberth_roots: leading and constant coefficients must be nonzero");

  const unsigned bits = current_precision_bits();
  const Real eps = pow2(-static_cast<int>(bits) + 4) * Real(deg);

  // Start on a circle whose radius is the geometric mean of the Fujiwara
  // bound and the reciprocal bound for the smallest root.
  using boost::multiprecision::pow;
  Real upper(0), lower(0);
  const Real lead = abs(coeffs.back());
  const Real tail = abs(coeffs.front());
  for (int i = 0; i < deg; ++i) {
    if (coeffs[i].is_zero())
      continue;
    Real r = pow(Real(abs(coeffs[i]) / lead), Real(Real(1) / Real(deg - i)));
    if (r > upper)
      upper = r;
  }
  for (int i = 1; i <= deg; ++i) {
    if (coeffs[i].is_zero())
      continue;
    Real r = pow(Real(abs(coeffs[i]) / tail), Real(Real(1) / Real(i)));
    if (r > lower)
      lower = r;
  }
  Real radius = boost::multiprecision::sqrt(Real(Real(2) * upper / lower));
  const Real two_pi = boost::math::constants::two_pi<Real>();

  std::vector<Scalar> z(deg);
  for (int k = 0; k < deg; ++k)
    z[k] = polar(radius, Real(two_pi * Real(k) / Real(deg) + Real(0.4)));

  std::vector<bool> frozen(deg, false);
  int remaining = deg;
  for (int iter = 0; iter < opt.max_iterations && remaining > 0; ++iter) {
    for (int k = 0; k < deg; ++k) {
      if (frozen[k])
        continue;
      auto [p, dp] = evaluate_with_derivative(coeffs, z[k]);
      Real scale = absolute_evaluation(coeffs, abs(z[k]));
      if (abs(p) <= eps * scale) {
        frozen[k] = true;
        --remaining;
        continue;
      }
      Scalar newton = p / dp;
      Scalar repulsion(0);
      for (int j = 0; j < deg; ++j)
        if (j != k)
          repulsion += Scalar(1) / (z[k] - z[j]);
      Scalar step = newton / (Scalar(1) - newton * repulsion);
      z[k] -= step;
      if (abs(step) <= eps * abs(z[k])) {
        frozen[k] = true;
        --remaining;
      }
    }
  }
  if (remaining > 0)
    throw NonConvergence("Aberth iteration did not converge for " + std::to_string(remaining) + " of " +
                         std::to_string(deg) + " roots");
  return z;
}

} // namespace talex::pretzel
