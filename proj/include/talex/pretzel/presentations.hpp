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

#include "talex/fox/presentation.hpp"

#include <stdexcept>

namespace talex::pretzel {

namespace gen3 {
inline constexpr int a = 0, b = 1, x = 2;
}
namespace gen2 {
inline constexpr int a = 0, c = 1;
}

/// axba(xb)^-1 in the three-generator presentation.
inline fox::Word three_gen_w() {
  using fox::Word;
  const Word a = Word::generator(gen3::a), b = Word::generator(gen3::b), x = Word::generator(gen3::x);
  return a * x * b * a * (x * b).inverse();
}

/// acac^-1 in the two-generator presentation.
inline fox::Word two_gen_w() {
  using fox::Word;
  const Word a = Word::generator(gen2::a), c = Word::generator(gen2::c);
  return a * c * a * c.inverse();
}

/// <a, b, x | W^-1 x = xb W^-1 (axb)^-1 xb,  x = W^n>,  W = axba(xb)^-1.
inline fox::Presentation presentation_three_gen(int n) {
  if (n < 1)
    throw std::invalid_argument("presentation_three_gen requires n >= 1");
  using fox::PowerProduct;
  using fox::Relator;
  using fox::Word;
  const Word a = Word::generator(gen3::a), b = Word::generator(gen3::b), x = Word::generator(gen3::x);
  const Word w = three_gen_w();
  fox::Presentation p;
  p.num_generators = 3;
  p.generator_names = {"a", "b", "x"};
  p.relators.push_back(Relator::equation(PowerProduct{{w, -1}, {x, 1}},
                                         PowerProduct{{x * b, 1}, {w, -1}, {a * x * b, -1}, {x * b, 1}}));
  p.relators.push_back(Relator::equation(PowerProduct(x), PowerProduct{{w, n}}));
  p.abelian_exponents = {1, 1, 2LL * n};
  p.validate();
  return p;
}

/// <a, c | (acac^-1)^(n-1) = c (acac^-1)^-1 (ac)^-1 c>, with c = xb.
inline fox::Presentation presentation_two_gen(int n) {
  if (n < 1)
    throw std::invalid_argument("presentation_two_gen requires n >= 1");
  using fox::PowerProduct;
  using fox::Relator;
  using fox::Word;
  const Word a = Word::generator(gen2::a), c = Word::generator(gen2::c);
  const Word w = two_gen_w();
  fox::Presentation p;
  p.num_generators = 2;
  p.generator_names = {"a", "c"};
  p.relators.push_back(
      Relator::equation(PowerProduct{{w, n - 1}}, PowerProduct{{c, 1}, {w, -1}, {a * c, -1}, {c, 1}}));
  p.abelian_exponents = {1, 2LL * n + 1};
  p.validate();
  return p;
}

} // namespace talex::pretzel
