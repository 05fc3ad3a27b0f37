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
#include <vector>

namespace talex::closed_form {

using pretzel::PretzelContext;

/// (s^k - s^-k) / (s - s^-1) as the finite sum s^{k-1} + s^{k-3} + ... + s^{1-k}.
inline Scalar symmetric_ratio(const Scalar &s, int k) {
  Scalar acc(0);
  for (int j = 0; j < k; ++j)
    acc += pow(s, k - 1 - 2 * j);
  return acc;
}

/// lambda_0 .. lambda_{2n-1}.
inline std::vector<Scalar> lambda_coefficients(const PretzelContext &c) {
  c.require_nondegenerate("lambda_coefficients");
  const int n = c.n;
  const Scalar one(1);
  const Scalar &m = c.m, &s = c.s, &H = c.H, &be = c.beta;
  const Scalar eta_sum = c.eta1 + c.eta2;
  const Scalar denom = H * m * be;
  std::vector<Scalar> lambda(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    if (i == 2 * n - 1) {
      lambda[i] = symmetric_ratio(s, n - 1) - (s * s - one) * c.eta1 / (H * c.S * be);
    } else if (i % 2 == 0) {
      const int j = i / 2 + 1;
      const Scalar sj = pow(s, j);
      lambda[i] = (one + m * m) * (H * sj * be - s * (sj - one / sj) * eta_sum) / denom;
    } else {
      lambda[i] = symmetric_ratio(s, (i - 1) / 2);
    }
  }
  return lambda;
}

/// 1 + sum_i lambda_i (t^{i+3} + t^{4n-i+3}) + t^{4n+6}.
inline DeltaResult delta_theorem(const PretzelContext &c) {
  const std::vector<Scalar> lambda = lambda_coefficients(c);
  LaurentPoly::Terms terms;
  terms.emplace(0, Scalar(1));
  terms.emplace(4 * c.n + 6, Scalar(1));
  for (int i = 0; i < 2 * c.n; ++i) {
    terms[i + 3] += lambda[i];
    terms[4 * c.n - i + 3] += lambda[i];
  }
  DeltaResult out;
  out.poly = LaurentPoly(std::move(terms));
  out.method = Method::theorem;
  out.context = std::make_shared<const PretzelContext>(c);
  return out;
}

} // namespace talex::closed_form
