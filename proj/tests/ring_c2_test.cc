/*
 * Copyright 2026 The eqhp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "eqhp/ring_c2.h"

#include <gtest/gtest.h>

#include "eqhp/errors.h"
#include "oracles.h"

namespace eqhp {
namespace {

const RingElement e = RingElement::Epsilon();
const RingElement x = RingElement::Xi();
const RingElement c = RingElement::SmallC();
const RingElement C = RingElement::BigC();

RingElement Mono(int a, int b, int i, int j, Coeff coeff = 1) {
  return RingElement::FromMonomial({a, b, i, j}, coeff);
}

TEST(MonomialTest, DegreesAndTorsion) {
  EXPECT_EQ((Monomial{1, 0, 0, 0}.degree()), (C2Degree{0, 1}));
  EXPECT_EQ((Monomial{0, 1, 0, 0}.degree()), (C2Degree{-2, 2}));
  EXPECT_EQ((Monomial{0, 0, 1, 0}.degree()), (C2Degree{0, 4}));
  EXPECT_EQ((Monomial{0, 0, 0, 1}.degree()), (C2Degree{4, 4}));
  EXPECT_TRUE((Monomial{1, 1, 0, 0}.torsion()));
  EXPECT_FALSE((Monomial{4, 0, 1, 3}.torsion()));
  EXPECT_FALSE((Monomial{0, 2, 0, 1}.torsion()));
}

TEST(RingElementTest, RelationRewrites) {
  EXPECT_EQ(c * c, Mono(4, 0, 1, 0) + Mono(0, 2, 0, 1));
  EXPECT_EQ((c * c).ToString(), "e^4*c + x^2*CC");
  EXPECT_EQ(c * (c * c), Mono(8, 0, 1, 0) + Mono(4, 2, 0, 1) + Mono(0, 2, 1, 1));
  EXPECT_EQ(RingElement::One() * C, C);
  EXPECT_EQ(Mono(0, 0, 2, 0), c * c);
}

TEST(RingElementTest, TorsionCoefficients) {
  const RingElement t = Mono(1, 1, 0, 0);
  EXPECT_TRUE((t + t).is_zero());
  EXPECT_EQ((t + t).degree(), t.degree());
  EXPECT_EQ(Mono(1, 1, 0, 0, 3), t);
  EXPECT_EQ(Mono(1, 1, 0, 0, -1), t);
  // Free coefficients survive doubling.
  EXPECT_EQ((c + c).coefficient({0, 0, 1, 0}), 2);
  EXPECT_EQ((Mono(3, 0, 0, 0) + Mono(3, 0, 0, 0)).coefficient({3, 0, 0, 0}), 2);
}

TEST(RingElementTest, HomogeneityIsStrict) {
  EXPECT_THROW(c + C, HomogeneityError);
  EXPECT_THROW(e - RingElement::One(), HomogeneityError);
  EXPECT_NO_THROW(Mono(4, 0, 0, 0) + c);
  EXPECT_EQ(RingElement() + c, c);
}

TEST(RingElementTest, DegreesAdd) {
  EXPECT_EQ((c * C).degree(), (C2Degree{4, 8}));
  EXPECT_EQ((x * x * C).degree(), (C2Degree{0, 8}));
  EXPECT_EQ(Power(e, 0), RingElement::One());
  EXPECT_THROW(Power(e, -1), DomainError);
}

TEST(RingElementTest, Display) {
  EXPECT_EQ(RingElement().ToString(), "0");
  EXPECT_EQ(RingElement::One().ToString(), "1");
  EXPECT_EQ((-c).ToString(), "-c");
  EXPECT_EQ(Mono(4, 0, 1, 0, 3).ToString(), "3*e^4*c");
  EXPECT_EQ((Mono(4, 0, 1, 0) - Mono(0, 2, 0, 1)).ToString(), "e^4*c - x^2*CC");
  EXPECT_EQ(RingElement::Integer(-2).ToString(), "-2");
}

TEST(EvalSunTest, Examples) {
  EXPECT_EQ(EvalSun(c * c).ToString(), "X^2");
  EXPECT_TRUE(EvalSun(Mono(4, 0, 1, 0)).is_zero());
  EXPECT_EQ(EvalSun(x * x * C).ToString(), "X^2");
  for (int k = 1; k <= 6; ++k) EXPECT_TRUE(EvalSun(Power(C, k), 2 * k).is_zero());
  EXPECT_EQ(EvalSun(Power(C, 2), 5).ToString(), "X^4");
}

TEST(EvalFixedTest, Examples) {
  EXPECT_EQ(EvalFixed(c * c, 1).ToString(), "e^8 + x^4*x1^2");
  EXPECT_EQ(EvalFixed(c * c, 0).ToString(), "x^4*x0^2");
  EXPECT_EQ(EvalFixed(C, 0, 3).ToString(), "e^4*x0");
  EXPECT_EQ(EvalFixed(c, 0).ToString(), "x^2*x0");
  EXPECT_EQ(EvalFixed(c, 1).ToString(), "e^4 + x^2*x1");
  EXPECT_THROW(EvalFixed(c, 2), DomainError);
}

TEST(EvalFixedTest, CrossTermVanishesByTorsion) {
  // (e^4 + x^2 x1)^2 = e^8 + 2 e^4 x^2 x1 + x^4 x1^2 with the middle term
  // in the Z/2 region.
  const FixedRingElement image = EvalFixed(c, 1);
  const FixedRingElement square = image * image;
  EXPECT_EQ(square, FixedRingElement::Term(1, {8, 0, 0}) + FixedRingElement::Term(1, {0, 4, 2}));
}

TEST(TruncationTest, Exponents) {
  EXPECT_EQ(FixedTruncationExponent(0, 3), 2);
  EXPECT_EQ(FixedTruncationExponent(1, 3), 1);
  EXPECT_EQ(FixedTruncationExponent(0, 4), 2);
  EXPECT_EQ(FixedTruncationExponent(1, 4), 2);
  EXPECT_THROW(FixedTruncationExponent(0, 0), DomainError);
}

TEST(TruncationTest, GeneratorImagesAcrossLevels) {
  // Images of c and C at level n against the closed forms, truncated by hand.
  for (int n = 2; n <= 12; ++n) {
    for (int r = 0; r <= 1; ++r) {
      const int t = r == 0 ? (n + 1) / 2 : n / 2;
      oracle::Poly c_image = oracle::Poly::Mono(0, 2, 1);
      if (r == 1) c_image = c_image + oracle::Poly::Mono(4, 0, 0);
      oracle::Poly big_image = oracle::Poly::Mono(4, 0, 1) + oracle::Poly::Mono(0, 2, 2);
      const auto as_poly = [](const FixedRingElement& f) {
        oracle::Poly p;
        for (const auto& [m, coeff] : f.terms()) p.Add({m.a, m.b, m.k}, coeff);
        return p;
      };
      EXPECT_EQ(as_poly(EvalFixed(c, r, n)), c_image.Truncate(t)) << n << " " << r;
      EXPECT_EQ(as_poly(EvalFixed(C, r, n)), big_image.Truncate(t)) << n << " " << r;
    }
  }
}

TEST(RelationTest, Passes) {
  const RelationCheck check = CheckRelation();
  ASSERT_TRUE(check.pass);
  ASSERT_EQ(check.comparisons.size(), 3u);
  EXPECT_EQ(check.comparisons[0].lhs, "X^2");
  EXPECT_EQ(check.comparisons[1].lhs, "x^4*x0^2");
  EXPECT_EQ(check.comparisons[2].lhs, "e^8 + x^4*x1^2");
  for (const auto& cmp : check.comparisons) EXPECT_EQ(cmp.lhs, cmp.rhs);
}

TEST(RelationTest, PerturbationsFail) {
  const RelationCheck doubled = CheckRelation(Mono(4, 0, 1, 0) + Mono(0, 2, 0, 1, 2));
  EXPECT_FALSE(doubled.pass);
  EXPECT_FALSE(doubled.comparisons[1].equal);
  EXPECT_EQ(doubled.comparisons[1].rhs, "e^4*x^2*x0 + 2*x^4*x0^2");
  const RelationCheck missing = CheckRelation(Mono(0, 2, 0, 1));
  EXPECT_FALSE(missing.pass);
  EXPECT_FALSE(missing.comparisons[2].equal);
  EXPECT_EQ(missing.comparisons[2].rhs, "e^4*x^2*x1 + x^4*x1^2");
  EXPECT_THROW(CheckRelation(C), HomogeneityError);
}

TEST(NuTest, Examples) {
  const NuRecord two = NuClass(2);
  EXPECT_EQ(two.nu, C);
  EXPECT_EQ(two.images.sun.ToString(), "X^2");
  EXPECT_EQ(two.images.fixed0.ToString(), "e^4*x0");
  EXPECT_EQ(two.images.fixed1.ToString(), "0");
  EXPECT_TRUE(two.matches);

  const NuRecord three = NuClass(3);
  EXPECT_EQ(three.nu, c * C);
  EXPECT_EQ(three.images.sun.ToString(), "X^3");
  EXPECT_EQ(three.images.fixed0.ToString(), "0");
  EXPECT_EQ(three.images.fixed1.ToString(), "e^8*x1");
  EXPECT_TRUE(three.matches);

  const NuRecord one = NuClass(1);
  EXPECT_EQ(one.nu, c);
  EXPECT_EQ(one.images.sun.ToString(), "X");
  EXPECT_EQ(one.images.fixed0.ToString(), "0");
  EXPECT_EQ(one.images.fixed1.ToString(), "e^4");
  EXPECT_TRUE(one.matches);

  EXPECT_THROW(NuClass(0), DomainError);
}

TEST(BasisTest, Examples) {
  EXPECT_EQ(MonomialBasis({0, 4}, 2), (std::vector<Monomial>{{4, 0, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(MonomialBasis({0, 0}, 2), (std::vector<Monomial>{{0, 0, 0, 0}}));
  EXPECT_EQ(MonomialBasis({0, 8}, 2),
            (std::vector<Monomial>{{8, 0, 0, 0}, {4, 0, 1, 0}, {0, 2, 0, 1}}));
  EXPECT_EQ(MonomialBasis({4, 8}, 2), (std::vector<Monomial>{{4, 0, 0, 1}, {0, 0, 1, 1}}));
  EXPECT_EQ(MonomialBasis({4, 4}, 2), (std::vector<Monomial>{{0, 0, 0, 1}}));
}

TEST(BasisTest, EveryMonomialHasTheDegree) {
  for (int m = -8; m <= 12; ++m) {
    for (int s = -4; s <= 24; ++s) {
      for (const Monomial& mono : MonomialBasis({m, s}, 3)) {
        EXPECT_EQ(mono.degree(), (C2Degree{m, s}));
        EXPECT_LE(mono.i, 1);
      }
    }
  }
}

TEST(ProbeTest, Examples) {
  const InjectivityProbe big = ProbeInjectivity({4, 4}, 2);
  EXPECT_TRUE(big.injective);
  EXPECT_EQ(big.basis.size(), 1u);
  const InjectivityProbe unit = ProbeInjectivity({0, 0}, 2);
  EXPECT_TRUE(unit.injective);
  const InjectivityProbe small = ProbeInjectivity({0, 4}, 2);
  EXPECT_TRUE(small.injective);
  EXPECT_EQ(small.free_rank, 2);
  EXPECT_THROW(ProbeInjectivity({1, 1}, 2), DomainError);
  EXPECT_THROW(ProbeInjectivity({0, 3}, 2), DomainError);
}

TEST(ProbeTest, EvenDegreesWindow) {
  for (int m = -8; m <= 12; m += 2) {
    for (int s = -4; s <= 24; s += 2) {
      const InjectivityProbe probe = ProbeInjectivity({m, s}, 3);
      EXPECT_TRUE(probe.injective) << m << "," << s;
    }
  }
}

}  // namespace
}  // namespace eqhp
