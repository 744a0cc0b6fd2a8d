#include <gtest/gtest.h>

#include "hensel/cylinder.hpp"
#include "hensel/oracle.hpp"
#include "hensel/suite.hpp"

using namespace hensel;

namespace {

std::vector<Integer> values_of(const IntCylinder& f) { return {f.values().begin(), f.values().end()}; }

}  // namespace

TEST(Cylinder, Indicator) {
  EXPECT_EQ(values_of(indicator(2, 3, 2)), (std::vector<Integer>{0, 0, 0, 1}));
  const auto one = indicator(0, 0, 3);
  EXPECT_EQ(one.level(), 0);
  EXPECT_EQ(one(17), 1);
  EXPECT_EQ(one(-4), 1);
  EXPECT_THROW(indicator(2, 4, 2), ParameterError);
  EXPECT_THROW(indicator(2, -1, 2), ParameterError);
}

TEST(Cylinder, IndicatorSplitsIntoFinerCylinders) {
  for (int s : {2, 3, 5}) {
    for (int n = 0; n < 3; ++n) {
      const Integer mod = checked_pow(s, n);
      for (Integer x = 0; x < mod; ++x) {
        auto sum = IntCylinder::zero(s);
        for (Integer l = 0; l < s; ++l) sum = sum + indicator(n + 1, x + l * mod, s);
        ASSERT_EQ(values_of(sum), values_of(indicator(n, x, s).refine(n + 1)));
      }
    }
  }
}

TEST(Cylinder, Evaluation) {
  EXPECT_EQ(indicator(3, 3, 2)(11), 1);
  EXPECT_EQ(indicator(2, 3, 2)(-1), 1);
  EXPECT_EQ(IntCylinder::constant(2, 9)(12345), 9);
  const auto f = indicator(3, 3, 2);
  EXPECT_EQ(f(SAdic::from_integer(11, 2, 5)), 1);
  EXPECT_THROW(f(SAdic::from_integer(11, 2, 2)), ParameterError);
}

TEST(Cylinder, Refine) {
  EXPECT_EQ(values_of(IntCylinder::constant(2, 1).refine(2)), (std::vector<Integer>{1, 1, 1, 1}));
  EXPECT_EQ(values_of(indicator(1, 1, 2).refine(2)), (std::vector<Integer>{0, 1, 0, 1}));
  EXPECT_THROW(indicator(2, 1, 2).refine(1), ParameterError);

  CaseRng rng(3);
  const auto f = random_full_function(rng, 3, 2);
  const auto g = f.refine(4);
  for (int k = 0; k < 1000; ++k) {
    const Integer z = rng.uniform(-100000, 100000);
    ASSERT_EQ(g(z), f(z));
  }
}

TEST(Cylinder, Alpha) {
  for (int s : {2, 3, 5}) {
    const auto a1 = alpha_endo(IntCylinder::constant(s, 1));
    for (Integer r = 0; r < a1.modulus(); ++r) ASSERT_EQ(a1(r), r % s == 0 ? 1 : 0);
    for (int n = 0; n < 3; ++n) {
      for (Integer x = 0; x < checked_pow(s, n); ++x) {
        ASSERT_EQ(alpha_endo(indicator(n, x, s)), indicator(n + 1, s * x, s));
      }
    }
  }
  CaseRng rng(5);
  EXPECT_EQ(alpha_endo(random_full_function(rng, 2, 3))(1), 0);
}

TEST(Cylinder, AlphaIsMultiplicative) {
  CaseRng rng(17);
  for (int s : {2, 3, 5}) {
    for (int k = 0; k < 40; ++k) {
      const auto f = random_full_function(rng, s, static_cast<int>(rng.uniform(0, 3)));
      const auto g = random_full_function(rng, s, static_cast<int>(rng.uniform(0, 3)));
      ASSERT_EQ(alpha_endo(f * g), alpha_endo(f) * alpha_endo(g));
      ASSERT_EQ(alpha_endo(f) * alpha_endo(IntCylinder::constant(s, 1)), alpha_endo(f));
      ASSERT_EQ(alpha_endo(f.refine(f.level() + 1)), alpha_endo(f));
    }
  }
}

TEST(Cylinder, RingOps) {
  EXPECT_TRUE((indicator(2, 1, 2) * indicator(2, 3, 2)).is_zero());
  const auto f = indicator(2, 3, 2);
  EXPECT_EQ(f + IntCylinder::zero(2), f);
  EXPECT_EQ(indicator(1, 1, 2) * indicator(2, 3, 2), indicator(2, 3, 2));
  EXPECT_THROW(indicator(1, 1, 2) + indicator(1, 1, 3), ParameterError);

  const auto u = f.as_units();
  EXPECT_EQ((u + indicator(1, 0, 2).refine(2)).domain(), Domain::full);
  EXPECT_EQ((u * indicator(1, 0, 2).refine(2)).domain(), Domain::units);
  EXPECT_EQ((u * IntCylinder::constant(2, 5)).domain(), Domain::units);
  EXPECT_EQ((u + u).domain(), Domain::units);
  EXPECT_EQ(u.scaled(4)(3), 4);
}

TEST(Cylinder, RefineCommutesWithOps) {
  CaseRng rng(23);
  for (int k = 0; k < 50; ++k) {
    const auto f = random_full_function(rng, 3, 2);
    const auto g = random_full_function(rng, 3, 1);
    ASSERT_EQ(values_of((f * g).refine(3)), values_of(f.refine(3) * g.refine(3)));
    ASSERT_EQ(values_of((f + g).refine(3)), values_of(f.refine(3) + g.refine(3)));
    ASSERT_EQ(values_of(alpha_endo(f).refine(4)), values_of(alpha_endo(f.refine(3))));
  }
}

TEST(Cylinder, UnitsInvariant) {
  EXPECT_THROW(IntCylinder(2, 1, Domain::units, {1, 1}), DomainError);
  EXPECT_THROW(IntCylinder(2, 2, Domain::full, {1, 1}), ParameterError);
  EXPECT_THROW(indicator(2, 2, 2).as_units(), DomainError);
  EXPECT_NO_THROW(indicator(2, 3, 2).as_units());
}

TEST(Lipschitz, Examples) {
  const auto f = indicator(2, 3, 2).as_units();
  const auto d = lipschitz(f);
  EXPECT_EQ(d.constant, Rational(2));
  EXPECT_EQ(d.norm, Rational(3));
  EXPECT_EQ(d.constant, oracle::lipschitz_all_pairs(f));

  const auto c = RatCylinder::units_constant(3, Rational(-7, 2));
  EXPECT_EQ(lipschitz(c).constant, Rational(0));
  EXPECT_EQ(lipschitz(c).norm, Rational(7, 2));

  const auto g = indicator(1, 2, 3).as_units();
  EXPECT_EQ(lipschitz(g).constant, oracle::lipschitz_all_pairs(g));
  EXPECT_EQ(lipschitz(g).constant, Rational(1));
}

TEST(Lipschitz, ComplexUnsupported) {
  const auto f = ComplexCylinder::units_constant(2, Complex(1.0, 1.0));
  EXPECT_THROW(lipschitz(f), UnsupportedError);
  EXPECT_THROW(lipschitz(indicator(1, 0, 2)), DomainError);
}

TEST(Lipschitz, MatchesAllPairsAndIsAttained) {
  CaseRng rng(29);
  for (int s : {2, 3}) {
    for (int k = 0; k < 60; ++k) {
      const int level = static_cast<int>(rng.uniform(1, 4));
      const auto f = random_units_rational(rng, s, level);
      const Rational l = lipschitz(f).constant;
      ASSERT_EQ(l, oracle::lipschitz_all_pairs(f));
      bool attained = l == 0;
      for (Integer a = 1; a < f.modulus(); ++a) {
        if (a % s == 0) continue;
        for (Integer b = a + 1; b < f.modulus(); ++b) {
          if (b % s == 0) continue;
          const Rational lhs = abs(Rational(f(a) - f(b)));
          const Rational rhs = l * norm_valuation(a - b, s).value;
          ASSERT_LE(lhs, rhs);
          if (lhs == rhs && lhs != 0) attained = true;
        }
      }
      ASSERT_TRUE(attained) << s << " level " << level << " L=" << format_rational(l);
    }
  }
}
