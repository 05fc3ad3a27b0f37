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
#include "talex/algebra/mat2.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace talex;

namespace {

class AlgebraTest : public ::testing::Test {
protected:
  PrecisionScope scope{256};
  std::mt19937_64 rng{20261016};

  LaurentPoly random_poly(int max_terms = 8, int lo = -4, int hi = 6) {
    std::uniform_int_distribution<int> count(1, max_terms), exp(lo, hi);
    LaurentPoly::Terms t;
    for (int i = 0, k = count(rng); i < k; ++i)
      t[exp(rng)] = oracle::random_scalar(rng);
    return LaurentPoly(std::move(t));
  }
};

Real tiny() { return pow2(-200); }

} // namespace

TEST_F(AlgebraTest, ScalarPrecisionPromotesToLarger) {
  Scalar a = Scalar(Real(1)).rounded_to(128);
  Scalar b = Scalar(Real(3)).rounded_to(512);
  EXPECT_GE((a / b).precision_bits(), 512u);
  EXPECT_GE((a + b).precision_bits(), 512u);
  EXPECT_GE(a.precision_bits(), 128u);
  EXPECT_LT(a.precision_bits(), 140u);
}

TEST_F(AlgebraTest, PrecisionScopeRejectsBelow64) { EXPECT_THROW(PrecisionScope(32), std::invalid_argument); }

TEST_F(AlgebraTest, ScalarDivisionAndPow) {
  Scalar z = Scalar::from_strings("1.5", "-0.25");
  EXPECT_LT(abs(z / z - Scalar(1)), tiny());
  EXPECT_LT(abs(pow(z, 5) * pow(z, -5) - Scalar(1)), tiny());
  EXPECT_LT(abs(pow(z, 3) - z * z * z), tiny());
  EXPECT_THROW(z / Scalar(0), std::domain_error);
}

TEST_F(AlgebraTest, MultiplyDifferenceOfSquares) {
  LaurentPoly p{{0, Scalar(1)}, {1, Scalar(1)}};
  LaurentPoly q{{0, Scalar(1)}, {1, Scalar(-1)}};
  LaurentPoly r = laurent_multiply(p, q);
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r.coeff(0), Scalar(1));
  EXPECT_EQ(r.coeff(2), Scalar(-1));
  EXPECT_TRUE(r.coeff(1).is_zero());
}

TEST_F(AlgebraTest, MultiplyUnitCancellation) {
  LaurentPoly r = LaurentPoly::monomial(Scalar(1), -1) * LaurentPoly::monomial(Scalar(1), 1);
  EXPECT_EQ(r.size(), 1u);
  EXPECT_EQ(r.coeff(0), Scalar(1));
}

TEST_F(AlgebraTest, MultiplyMatchesBruteForceConvolution) {
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly p = random_poly(), q = random_poly();
    LaurentPoly r = p * q;
    auto ref = oracle::convolve(p.terms(), q.terms());
    for (const auto &[e, c] : ref)
      EXPECT_LT(abs(r.coeff(e) - c), tiny()) << "exp " << e;
    EXPECT_GE(r.min_exp(), p.min_exp() + q.min_exp());
    EXPECT_LE(r.max_exp(), p.max_exp() + q.max_exp());
  }
}

TEST_F(AlgebraTest, DivideExactExamples) {
  const Real tol = pow2(-128);
  LaurentPoly num{{0, Scalar(1)}, {2, Scalar(-1)}};
  LaurentPoly den{{0, Scalar(1)}, {1, Scalar(-1)}};
  LaurentPoly q = laurent_divide_exact(num, den, tol);
  EXPECT_EQ(q.size(), 2u);
  EXPECT_LT(abs(q.coeff(0) - Scalar(1)), tiny());
  EXPECT_LT(abs(q.coeff(1) - Scalar(1)), tiny());

  LaurentPoly shifted = laurent_divide_exact(LaurentPoly{{0, Scalar(1)}, {1, Scalar(1)}},
                                             LaurentPoly::monomial(Scalar(1), 2), tol);
  EXPECT_EQ(shifted.min_exp(), -2);
  EXPECT_EQ(shifted.max_exp(), -1);
  EXPECT_LT(abs(shifted.coeff(-2) - Scalar(1)), tiny());
}

TEST_F(AlgebraTest, DivideInexactThrows) {
  LaurentPoly num{{0, Scalar(1)}, {2, Scalar(1)}};
  LaurentPoly den{{0, Scalar(1)}, {1, Scalar(-1)}};
  EXPECT_THROW(laurent_divide_exact(num, den, pow2(-128)), InexactDivision);
  EXPECT_THROW(laurent_divide(num, LaurentPoly()), SingularDenominator);
}

TEST_F(AlgebraTest, DivideIsLeftInverseOfMultiply) {
  const Real tol = pow2(-150);
  for (int trial = 0; trial < 120; ++trial) {
    LaurentPoly p = random_poly(), q = random_poly();
    LaurentPoly back = laurent_divide_exact(p * q, q, tol);
    EXPECT_LT(max_coefficient_deviation(back, p), pow2(-150)) << "trial " << trial;
  }
}

TEST_F(AlgebraTest, RingAxiomsAtTolerance) {
  const Real tol = pow2(-(256 - 16));
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly p = random_poly(5), q = random_poly(5), r = random_poly(5);
    EXPECT_LT(max_coefficient_deviation((p * q) * r, p * (q * r)), tol);
    EXPECT_LT(max_coefficient_deviation(p * (q + r), p * q + p * r), tol);
    EXPECT_LT(max_coefficient_deviation(p * q, q * p), tol);
  }
}

TEST_F(AlgebraTest, SweepDropsRoundingNoise) {
  LaurentPoly p{{0, Scalar(1)}, {3, Scalar(Real(pow2(-300)))}};
  EXPECT_EQ(p.size(), 1u);
  LaurentPoly q{{0, Scalar(1)}, {1, Scalar(1)}};
  EXPECT_TRUE((q - q).is_zero());
}

TEST_F(AlgebraTest, DeterminantExamples) {
  EXPECT_EQ(mat2_determinant(ScalarMat::identity()), Scalar(1));
  PolyMat d{LaurentPoly::monomial(Scalar(1), 1), LaurentPoly(), LaurentPoly(), LaurentPoly::monomial(Scalar(1), -1)};
  LaurentPoly det = mat2_determinant(d);
  EXPECT_EQ(det.size(), 1u);
  EXPECT_EQ(det.coeff(0), Scalar(1));
}

TEST_F(AlgebraTest, DeterminantMatchesCofactorFormulaAndIsMultiplicative) {
  for (int trial = 0; trial < 50; ++trial) {
    ScalarMat a{oracle::random_scalar(rng), oracle::random_scalar(rng), oracle::random_scalar(rng),
                oracle::random_scalar(rng)};
    ScalarMat b{oracle::random_scalar(rng), oracle::random_scalar(rng), oracle::random_scalar(rng),
                oracle::random_scalar(rng)};
    Scalar direct = a.a11 * a.a22 - a.a21 * a.a12;
    EXPECT_LT(abs(mat2_determinant(a) - direct), tiny());
    EXPECT_LT(abs(mat2_determinant(a * b) - mat2_determinant(a) * mat2_determinant(b)), pow2(-240));
  }
}

TEST_F(AlgebraTest, InverseAndPower) {
  ScalarMat a{Scalar(2), Scalar(1), Scalar(1), Scalar(1)};
  EXPECT_LT(norm_inf(a * inverse(a) - ScalarMat::identity()), tiny());
  EXPECT_LT(norm_inf(pow(a, 3) - a * a * a), tiny());
  EXPECT_LT(norm_inf(pow(a, -2) * a * a - ScalarMat::identity()), tiny());
}
