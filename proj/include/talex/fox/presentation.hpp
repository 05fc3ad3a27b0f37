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

#include "talex/algebra/mat2.hpp"
#include "talex/fox/word.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace talex::fox {

/// A defining relation lhs = rhs. A single-word relator r is stored as r = 1.
struct Relator {
  PowerProduct lhs;
  PowerProduct rhs;

  static Relator word(Word r) { return {PowerProduct(std::move(r)), PowerProduct()}; }
  static Relator equation(PowerProduct lhs, PowerProduct rhs) { return {std::move(lhs), std::move(rhs)}; }

  /// Exponent sum of generator g in lhs * rhs^-1.
  long long exponent_sum(int g) const { return lhs.exponent_sum(g) - rhs.exponent_sum(g); }

  /// lhs * rhs^-1 as a single reduced word.
  Word as_word() const { return lhs.expand() * rhs.expand().inverse(); }
};

using AbelianExponents = std::vector<long long>;

/// Deficiency-one presentation <x_1..x_g | r_1..r_{g-1}> with the exponent of
/// t assigned to each generator by the abelianization.
struct Presentation {
  int num_generators = 0;
  std::vector<std::string> generator_names;
  std::vector<Relator> relators;
  AbelianExponents abelian_exponents;

  /// Throws std::invalid_argument when the deficiency-one shape or the
  /// abelianization compatibility fails.
  void validate() const {
    if (num_generators < 1)
      throw std::invalid_argument("presentation needs at least one generator");
    if (static_cast<int>(relators.size()) != num_generators - 1)
      throw std::invalid_argument("presentation must have num_generators - 1 relators");
    if (!abelian_exponents.empty()) {
      if (static_cast<int>(abelian_exponents.size()) != num_generators)
        throw std::invalid_argument("one abelian exponent per generator required");
      for (std::size_t i = 0; i < relators.size(); ++i)
        if (abelianized_degree(relators[i]) != 0)
          throw std::invalid_argument("relator " + std::to_string(i) + " does not abelianize to 0");
    }
  }

  long long abelianized_degree(const Word &w) const {
    long long d = 0;
    for (const Letter &l : w.letters())
      d += l.exp * abelian_exponents.at(l.gen);
    return d;
  }

  long long abelianized_degree(const Relator &r) const {
    long long d = 0;
    for (int g = 0; g < num_generators; ++g)
      d += r.exponent_sum(g) * abelian_exponents.at(g);
    return d;
  }
};

/// Images of the generators in SL2.
struct Representation {
  std::vector<ScalarMat> images;

  ScalarMat image(const Word &w) const {
    ScalarMat acc = ScalarMat::identity();
    std::vector<std::optional<ScalarMat>> inv(images.size());
    for (const Letter &l : w.letters()) {
      if (l.exp > 0) {
        acc *= images.at(l.gen);
      } else {
        if (!inv[l.gen])
          inv[l.gen] = inverse(images.at(l.gen));
        acc *= *inv[l.gen];
      }
    }
    return acc;
  }

  ScalarMat image(const PowerProduct &p) const {
    ScalarMat acc = ScalarMat::identity();
    for (const auto &f : p.factors())
      acc *= pow(image(f.base), f.power);
    return acc;
  }

  /// ||rho(lhs) - rho(rhs)||_inf.
  Real relator_residual(const Relator &r) const { return norm_inf(image(r.lhs) - image(r.rhs)); }

  /// max_g |det rho(g) - 1|.
  Real determinant_defect() const {
    Real worst(0);
    for (const auto &m : images)
      worst = std::max(worst, Real(abs(mat2_determinant(m) - Scalar(1))));
    return worst;
  }
};

} // namespace talex::fox
