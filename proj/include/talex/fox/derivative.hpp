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

#include "talex/fox/group_ring.hpp"
#include "talex/fox/presentation.hpp"

namespace talex::fox {

/// Fox derivative d w / d x_j by one left-to-right scan:
/// a letter x_j contributes +prefix, a letter x_j^-1 contributes
/// -(prefix x_j^-1).
inline GroupRingElement fox_derivative(const Word &w, int j) {
  GroupRingElement out;
  Word prefix;
  for (const Letter &l : w.letters()) {
    Word next = prefix * Word::generator(l.gen, l.exp);
    if (l.gen == j) {
      if (l.exp > 0)
        out.add(prefix, 1);
      else
        out.add(next, -1);
    }
    prefix = std::move(next);
  }
  return out;
}

/// d(w^k)/dx_j = (1 + w + ... + w^{k-1}) dw for k > 0 and
/// -(w^-1 + ... + w^-|k|) dw for k < 0.
inline GroupRingElement fox_derivative_of_power(const Word &base, long long k, int j) {
  GroupRingElement dw = fox_derivative(base, j);
  GroupRingElement geometric;
  if (k > 0) {
    Word p;
    for (long long i = 0; i < k; ++i) {
      geometric.add(p, 1);
      p *= base;
    }
  } else if (k < 0) {
    Word inv = base.inverse();
    Word p = inv;
    for (long long i = 0; i < -k; ++i) {
      geometric.add(p, -1);
      p *= inv;
    }
  }
  return geometric * dw;
}

inline GroupRingElement fox_derivative(const PowerProduct &p, int j) {
  GroupRingElement out;
  Word prefix;
  for (const auto &f : p.factors()) {
    out += prefix * fox_derivative_of_power(f.base, f.power, j);
    prefix *= f.base.power(f.power);
  }
  return out;
}

/// Formal difference d(lhs) - d(rhs). Under any map that respects the
/// relation this agrees with d(lhs rhs^-1).
inline GroupRingElement fox_derivative_of_relator(const Relator &r, int j) {
  return fox_derivative(r.lhs, j) - fox_derivative(r.rhs, j);
}

} // namespace talex::fox
