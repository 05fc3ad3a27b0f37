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

#include "oracles.hpp"
#include "talex/pretzel/holonomy.hpp"
#include "talex/pretzel/r0.hpp"
#include "talex/pretzel/root_solver.hpp"
#include "talex/pretzel/roots.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace talex;
using namespace talex::pretzel;

namespace {

class PretzelTest : public ::testing::Test {
protected:
  PrecisionScope scope{256};
  std::mt19937_64 rng{31337};

  Scalar random_point() {
    Scalar z = oracle::random_scalar(rng, -1.5, 1.5);
    return abs(z) < Real("0.3") ? z + Scalar(1) : z;
  }
};

const Scalar kM = Scalar::from_strings("1.2", "0.4");

Real rel(const Scalar &x, const Scalar &y) { return abs(x - y) / std::max(Real(1), Real(abs(y))); }

PretzelContext first_good_context(int n, const Scalar &m) {
  auto roots = solve_s_roots(n, m, 256);
  return build_context(n, m, roots.at(*default_root_index(roots)).s, true);
}

} // namespace

TEST_F(PretzelTest, R0MatchesIndependentOracle) {
  for (int n = 1; n <= 5; ++n) {
    const BivarPoly r0 = r0_polynomial(n);
    for (int trial = 0; trial < 20; ++trial) {
      Scalar m = random_point(), s = random_point();
      EXPECT_LT(rel(r0.evaluate(m, s), oracle::r0(n, m, s)), Real("1e-60")) << "n=" << n;
    }
  }
}

TEST_F(PretzelTest, R0VanishesAtPlusMinusOne) {
  for (int n = 1; n <= 8; ++n) {
    const BivarPoly r0 = r0_polynomial(n);
    for (int trial = 0; trial < 5; ++trial) {
      Scalar m = random_point();
      EXPECT_LT(abs(r0.evaluate(m, Scalar(1))), Real("1e-60"));
      EXPECT_LT(abs(r0.evaluate(m, Scalar(-1))), Real("1e-60"));
    }
  }
}

TEST_F(PretzelTest, R0IsPalindromicInMAndDivisibleByS2Minus1) {
  const BivarPoly s2m1 = BivarPoly::s(2) - BivarPoly(1);
  for (int n = 1; n <= 8; ++n) {
    const BivarPoly r0 = r0_polynomial(n);
    EXPECT_EQ(r0.degree_m(), n == 1 ? 6 : 8);
    EXPECT_EQ(r0.mirror_m(8), r0);
    auto [q, rem] = r0.divide_by_monic_s(s2m1);
    EXPECT_TRUE(rem.is_zero()) << "n=" << n;
    EXPECT_EQ(q * s2m1, r0);
  }
}

TEST_F(PretzelTest, BivarArithmetic) {
  BivarPoly p = BivarPoly::s() + BivarPoly::m(2);
  EXPECT_EQ(p * p, BivarPoly::s(2) + BivarPoly::term(2, 1, 2) + BivarPoly::m(4));
  EXPECT_EQ(p.pow(3), p * p * p);
  EXPECT_EQ(BivarPoly::s_poly_desc({1, 0, -1}), BivarPoly::s(2) - BivarPoly(1));
  EXPECT_TRUE((p - p).is_zero());
  auto [q, r] = (BivarPoly::s(3) + BivarPoly(1)).divide_by_monic_s(BivarPoly::s() + BivarPoly(1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, BivarPoly::s_poly_desc({1, -1, 1}));
}

TEST_F(PretzelTest, AberthFindsKnownRoots) {
  // (s - 2)(s + i)(s - 0.5) expanded, ascending
  const Scalar i(Real(0), Real(1));
  std::vector<Scalar> expected{Scalar(2), -i, Scalar(Real("0.5"))};
  std::vector<Scalar> coeffs{Scalar(1)};
  for (const Scalar &r : expected) {
    std::vector<Scalar> next(coeffs.size() + 1, Scalar(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= r * coeffs[k];
    }
    coeffs = next;
  }
  auto roots = aberth_roots(coeffs);
  ASSERT_EQ(roots.size(), 3u);
  for (const Scalar &r : expected) {
    Real best(10);
    for (const Scalar &z : roots)
      best = std::min(best, Real(abs(z - r)));
    EXPECT_LT(best, Real("1e-60"));
  }
}

TEST_F(PretzelTest, RootsHaveSmallResidualAndFlagPlusMinusOne) {
  for (int n = 1; n <= 5; ++n) {
    for (const Scalar &m : {kM, Scalar::from_strings("0.9", "-0.2")}) {
      auto roots = solve_s_roots(n, m, 256);
      EXPECT_LE(static_cast<int>(roots.size()), r0_polynomial(n).degree_s());
      bool saw_one = false, saw_minus_one = false;
      for (const SRoot &r : roots) {
        EXPECT_LE(r.residual, Real("1e-25"));
        saw_one |= r.flags.has(Degeneracy::s_one);
        saw_minus_one |= r.flags.has(Degeneracy::s_minus_one);
        if (abs(r.s - Scalar(1)) < Real("1e-12"))
          EXPECT_TRUE(r.flags.has(Degeneracy::s_one));
      }
      EXPECT_TRUE(saw_one);
      EXPECT_TRUE(saw_minus_one);
      EXPECT_TRUE(default_root_index(roots).has_value());
    }
  }
}

TEST_F(PretzelTest, RootSolverRejectsZeroMeridian) {
  EXPECT_THROW(solve_s_roots(2, Scalar(0), 256), std::invalid_argument);
}

TEST_F(PretzelTest, AuxiliaryExpressionsMatchOracles) {
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      Scalar m = random_point(), s = random_point();
      auto [al, be] = alpha_beta(n, m, s);
      EXPECT_LT(rel(al, oracle::alpha(n, m, s)), Real("1e-60"));
      EXPECT_LT(rel(be, oracle::beta(n, m, s)), Real("1e-60"));
      EXPECT_LT(rel(h_expr(n, m, s), oracle::H(n, m, s)), Real("1e-60"));
      EXPECT_LT(rel(eta1_expr(n, m, s, al, be), oracle::eta1(n, m, s, al, be)), Real("1e-60"));
      EXPECT_LT(rel(eta2_expr(n, m, s, al, be), oracle::eta2(n, m, s, al, be)), Real("1e-60"));
      EXPECT_LT(rel(r1_expr(n, m, s, al, be), oracle::r1(n, m, s, al, be)), Real("1e-60"));
    }
  }
}

TEST_F(PretzelTest, AuxiliaryExpressionsVanishWhereExpected) {
  for (int n = 1; n <= 4; ++n) {
    Scalar m = random_point();
    EXPECT_LT(abs(alpha_expr(n, m, Scalar(1))), Real("1e-60"));
    EXPECT_LT(abs(h_expr(n, m, Scalar(1))), Real("1e-60"));
    EXPECT_LT(abs(beta_expr(n, Scalar(0), random_point())), Real("1e-60"));
  }
}

TEST_F(PretzelTest, DegeneracyFlags) {
  auto ctx = build_context(2, kM, Scalar(1));
  EXPECT_TRUE(ctx.degeneracy_flags.has(Degeneracy::s_one));
  EXPECT_THROW(build_context(2, kM, Scalar(1), true), DegenerateContext);
  EXPECT_THROW(holonomy_matrices(ctx), DegenerateContext);
  EXPECT_THROW(build_context(0, kM, Scalar(2)), std::invalid_argument);
  auto names = build_context(2, kM, Scalar(-1)).degeneracy_flags.names();
  EXPECT_NE(std::find(names.begin(), names.end(), "s_minus_one"), names.end());
}

TEST_F(PretzelTest, HolonomyIsSL2WithExpectedTraces) {
  for (int n = 1; n <= 5; ++n) {
    const PretzelContext ctx = first_good_context(n, kM);
    const HolonomyMatrices h = holonomy_matrices(ctx);
    const Real tol("1e-60");
    for (const ScalarMat &g : {h.A, h.B, h.X})
      EXPECT_LT(abs(mat2_determinant(g) - Scalar(1)), tol);
    EXPECT_LT(abs(trace(h.A) - (kM + Scalar(1) / kM)), tol);
    EXPECT_LT(abs(trace(h.B) - (kM + Scalar(1) / kM)), Real("1e-40"));
    EXPECT_LT(abs(trace(h.X) - (ctx.S + Scalar(1) / ctx.S)), tol);
    // X has eigenvalues S and S^-1
    const ScalarMat shifted = h.X - ScalarMat{ctx.S, Scalar(0), Scalar(0), ctx.S};
    EXPECT_LT(abs(mat2_determinant(shifted)), tol);
  }
}

TEST_F(PretzelTest, RelationsHoldAtRoots) {
  for (int n = 1; n <= 5; ++n) {
    for (const Scalar &m : {kM, Scalar::from_strings("0.9", "-0.2")}) {
      auto roots = solve_s_roots(n, m, 256);
      for (const SRoot &r : roots) {
        if (!r.flags.empty())
          continue;
        PretzelContext ctx = build_context(n, m, r.s, true);
        RelationReport rep = rep_relation_check(ctx);
        EXPECT_LE(rep.max_residual(), Real("1e-25")) << "n=" << n;
        EXPECT_LE(rep.determinant_defect, Real("1e-25"));
        EXPECT_LE(abs(eval_r1(ctx)), Real("1e-25") * r1_scale(ctx));
      }
    }
  }
}

TEST_F(PretzelTest, PerturbedRootBreaksRelations) {
  for (int n = 1; n <= 5; ++n) {
    PretzelContext good = first_good_context(n, kM);
    PretzelContext bad = build_context(n, kM, good.s + Scalar(Real("1e-3")), true);
    EXPECT_GT(rep_relation_check(bad).max_residual(), Real("1e-6"));
    EXPECT_GT(abs(eval_r1(bad)), Real("1e-6") * r1_scale(bad));
  }
}

TEST_F(PretzelTest, PresentationShapes) {
  auto p1 = presentation_two_gen(1);
  EXPECT_EQ(p1.relators.size(), 1u);
  EXPECT_EQ(p1.abelian_exponents, (fox::AbelianExponents{1, 3}));
  EXPECT_TRUE(p1.relators[0].lhs.expand().empty());
  auto p3 = presentation_three_gen(2);
  EXPECT_EQ(p3.relators.size(), 2u);
  EXPECT_EQ(p3.abelian_exponents, (fox::AbelianExponents{1, 1, 4}));
  EXPECT_EQ(p3.abelianized_degree(three_gen_w()), 2);
  EXPECT_EQ(two_gen_w().to_string({"a", "c"}), "a c a c^-1");
  EXPECT_THROW(presentation_two_gen(0), std::invalid_argument);
  EXPECT_THROW(presentation_three_gen(0), std::invalid_argument);
}
