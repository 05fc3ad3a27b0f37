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
#include "talex/pretzel/context.hpp"
#include "talex/pretzel/presentations.hpp"

namespace talex::pretzel {

struct HolonomyMatrices {
  ScalarMat A; // rho(a)
  ScalarMat B; // rho(b)
  ScalarMat X; // rho(x)
};

inline HolonomyMatrices holonomy_matrices(const PretzelContext &c) {
  c.require_nondegenerate("holonomy_matrices");
  const Scalar one(1);
  const Scalar &m = c.m, &s = c.s, &al = c.alpha, &be = c.beta;
  const Scalar odd = pow(s, 2 * c.n + 1) + one;
  HolonomyMatrices h;
  h.A = {m, -(m * m - s) * odd / (m * (s + one)), Scalar(0), one / m};
  const Scalar g1 = s * al - m * be; // s alpha - m beta
  const Scalar g2 = m * s * al - be; // m s alpha - beta
  const Scalar pre = one / (s * al);
  h.B = {pre * be, -pre * g1 * g2 / (m * be), pre * be, pre * (m * g2 + s * al) / m};
  h.X = {c.S, Scalar(0), (c.S - one / c.S) / odd, one / c.S};
  return h;
}

struct HolonomyRep {
  fox::Representation three_gen; // a, b, x
  fox::Representation two_gen;   // a, c = xb
};

inline HolonomyRep build_holonomy_rep(const PretzelContext &c) {
  HolonomyMatrices h = holonomy_matrices(c);
  HolonomyRep r;
  r.three_gen.images = {h.A, h.B, h.X};
  r.two_gen.images = {h.A, h.X * h.B};
  return r;
}

inline Scalar eval_r1(const PretzelContext &c) { return r1_expr(c.n, c.m, c.s, c.alpha, c.beta); }

/// Sum of term magnitudes of r1 at this point, the scale for |r1| ~ 0.
inline Real r1_scale(const PretzelContext &c) {
  return r1_expr(c.n, Magnitude(abs(c.m)), Magnitude(abs(c.s)), Magnitude(abs(c.alpha)), Magnitude(abs(c.beta))).v;
}

struct RelationReport {
  Real three_gen_link;     // W^-1 x = xb W^-1 (axb)^-1 xb
  Real three_gen_surgery;  // x = W^n
  Real two_gen;
  Real determinant_defect; // max |det rho(g) - 1|

  Real max_residual() const { return std::max({three_gen_link, three_gen_surgery, two_gen}); }
};

inline RelationReport rep_relation_check(const PretzelContext &c) {
  HolonomyRep rep = build_holonomy_rep(c);
  const fox::Presentation p3 = presentation_three_gen(c.n);
  const fox::Presentation p2 = presentation_two_gen(c.n);
  RelationReport out;
  out.three_gen_link = rep.three_gen.relator_residual(p3.relators[0]);
  out.three_gen_surgery = rep.three_gen.relator_residual(p3.relators[1]);
  out.two_gen = rep.two_gen.relator_residual(p2.relators[0]);
  out.determinant_defect = std::max(rep.three_gen.determinant_defect(), rep.two_gen.determinant_defect());
  return out;
}

} // namespace talex::pretzel
