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

#include "talex/algebra/laurent_poly.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace talex {

namespace pretzel {
struct PretzelContext;
}

enum class Method { fox, theorem, prop32 };

inline std::string_view to_string(Method m) {
  switch (m) {
  case Method::fox:
    return "fox";
  case Method::theorem:
    return "theorem";
  case Method::prop32:
    return "prop32";
  }
  return "?";
}

/// normalized = sign * t^shift * raw
struct Unit {
  int sign = 1;
  int shift = 0;
};

struct DeltaResult {
  LaurentPoly poly;
  Unit unit;
  Method method = Method::fox;
  std::shared_ptr<const pretzel::PretzelContext> context;
  /// Relative division remainder; only meaningful for Method::fox.
  Real division_remainder = Real(0);
};

/// Shift the support to start at exponent 0 and flip the sign when the
/// constant term is within `tol` of -1.
inline std::pair<LaurentPoly, Unit> normalize_unit(const LaurentPoly &p, const Real &tol) {
  Unit u;
  if (p.is_zero())
    return {p, u};
  u.shift = -p.min_exp();
  LaurentPoly q = p.shifted(u.shift);
  if (abs(q.coeff(0) + Scalar(1)) <= tol) {
    u.sign = -1;
    q = -q;
  }
  return {std::move(q), u};
}

} // namespace talex
