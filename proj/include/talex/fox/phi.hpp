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

/// Phi(w) = rho(w) t^{alpha(w)}, extended Z-linearly.
inline PolyMat phi_map(const GroupRingElement &e, const Representation &rho, const AbelianExponents &exps) {
  PolyMat out = PolyMat::zero();
  for (const auto &[w, c] : e.terms()) {
    long long deg = 0;
    for (const Letter &l : w.letters())
      deg += l.exp * exps.at(l.gen);
    out += monomial_matrix(Scalar(c) * rho.image(w), static_cast<int>(deg));
  }
  return out;
}

} // namespace talex::fox
