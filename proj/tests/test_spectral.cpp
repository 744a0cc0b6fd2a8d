#include <gtest/gtest.h>

#include "hensel/oracle.hpp"
#include "hensel/spectral.hpp"
#include "hensel/suite.hpp"

using namespace hensel;

namespace {

const LambdaParams kUnit(1, 1);

}  // namespace

TEST(Spectral, LambdaParams) {
  EXPECT_THROW(LambdaParams(0, 1), ParameterError);
  EXPECT_THROW(LambdaParams(1, -1), ParameterError);
}

TEST(Spectral, LambdaValues) {
  EXPECT_EQ(lambda_val(3, 0, kUnit, 2), Rational(4));
  EXPECT_EQ(lambda_val(5, 2, LambdaParams(Rational(1, 2), 2), 3), Rational(19));
  for (Integer y = 2; y < 60; ++y) {
    if (!in_T(y, 3)) continue;
    for (Integer l = 0; l < 10; ++l) {
      const LambdaParams p(Rational(3, 7), Rational(5, 2));
      ASSERT_EQ(lambda_val(y, l + 1, p, 3) - lambda_val(y, l, p, 3), p.c1);
    }
  }
  EXPECT_THROW(lambda_val(4, 0, kUnit, 2), DomainError);
}

TEST(Spectral, Dirac) {
  const HomT phi(2, {{3, 2}, {5, -1}});
  const ModuleTruncation mt(phi, 3);
  const auto ops = build_D(mt, kUnit);
  EXPECT_EQ(ops.dirac.adjoint(), ops.dirac);
  const auto fg = build_F_Gamma(mt);
  EXPECT_TRUE((fg.gamma * ops.dirac + ops.dirac * fg.gamma).empty());
  const auto sq = ops.dirac * ops.dirac;
  Rational smallest = -1;
  for (const auto& [c, col] : sq.columns()) {
    ASSERT_EQ(col.size(), 1u);
    ASSERT_EQ(col.begin()->first, c);
    const auto lab = mt.label(Parity::odd, c % mt.dimension());
    const Rational lam = lambda_val(lab.y, lab.l, kUnit, 2);
    ASSERT_EQ(col.begin()->second, lam * lam);
    if (smallest < 0 || lam * lam < smallest) smallest = lam * lam;
  }
  EXPECT_EQ(smallest, Rational(16));
}

TEST(Spectral, ShiftNorm) {
  const HomT phi(2, {{3, 2}, {5, -1}});
  const auto n1 = comm_norm_shift(1, kUnit, phi, 16);
  EXPECT_EQ(n1.exact, Rational(1));
  EXPECT_EQ(n1.entry_scan, Rational(1));
  EXPECT_NEAR(n1.estimate, 1.0, 1e-9);
  EXPECT_EQ(comm_norm_shift(0, kUnit, phi, 4).exact, Rational(0));
  EXPECT_EQ(comm_norm_shift(0, kUnit, phi, 4).entry_scan, Rational(0));
  const auto n3 = comm_norm_shift(3, LambdaParams(2, 1), phi, 8);
  EXPECT_EQ(n3.exact, Rational(6));
  EXPECT_EQ(n3.entry_scan, Rational(6));
  EXPECT_EQ(comm_norm_shift(1, kUnit, HomT(2), 4).exact, Rational(0));
}

TEST(Spectral, MultNormExample) {
  const HomT phi(2, {{3, 1}});
  const CylinderFamily family{{0, generator(3, 2).cast<Rational>()}};
  const auto n = comm_norm_mult(family, kUnit, phi);
  EXPECT_EQ(n.exact, Rational(4));
  EXPECT_EQ(n.bound, Rational(6));
  ASSERT_TRUE(n.exact_witness);
  EXPECT_EQ(n.exact_witness->y, 3);
}

TEST(Spectral, MultNormConstantFamily) {
  const HomT phi(3, {{5, 2}, {7, -1}, {11, 3}});
  const CylinderFamily family{{1, RatCylinder::units_constant(3, Rational(5))}};
  // F(l, gamma(y)) differs only when gamma(y) = 0
  for (const auto& [y, c] : phi.coeffs()) ASSERT_NE(gamma_of(y, 3), 0);
  EXPECT_EQ(comm_norm_mult(family, kUnit, phi).exact, Rational(0));
}

TEST(Spectral, MultNormAgainstLabels) {
  CaseRng rng(307);
  for (int s : {2, 3}) {
    for (int k = 0; k < 60; ++k) {
      const auto phi = random_hom(rng, s, 80, 4);
      const auto family = random_family(rng, s);
      const LambdaParams p(make_rational(rng.uniform(1, 5), rng.uniform(1, 3)), make_rational(rng.uniform(1, 5), 2));
      const auto n = comm_norm_mult(family, p, phi);
      ASSERT_EQ(n.exact, oracle::mult_commutator_by_labels(family, p, phi));
      ASSERT_LE(n.exact, n.bound);
    }
  }
}

TEST(Spectral, VanishingBeyondLevel) {
  CaseRng rng(311);
  for (int s : {2, 3}) {
    const auto phi = random_hom(rng, s, 300, 8);
    const auto family = random_family(rng, s);
    for (const auto& [y, c] : phi.coeffs()) {
      for (const auto& [l, f] : family) {
        if (level_of(y, s) <= f.level()) continue;
        const Integer g = gamma_of(y, s);
        ASSERT_EQ(f(y), g == 0 ? Rational(0) : f(g));
      }
    }
  }
}

TEST(Spectral, FrechetNorm) {
  PolyElement a;
  a.ideal_terms[0] = {{0, generator(3, 2).cast<Rational>()}};
  EXPECT_EQ(frechet_norm(a, 1), Rational(3));
  PolyElement v;
  v.toeplitz[1] = 1;
  EXPECT_EQ(frechet_norm(v, 1), Rational(2));
  CaseRng rng(313);
  for (int k = 0; k < 50; ++k) {
    const auto b = random_poly_element(rng, 2);
    ASSERT_LE(frechet_norm(b, 0), frechet_norm(b, 1));
    ASSERT_LE(frechet_norm(b, 1), frechet_norm(b, 2));
  }
}

TEST(Spectral, BoundCheckExamples) {
  const HomT phi(2, {{3, 1}});
  PolyElement v;
  v.toeplitz[1] = 1;
  const auto bv = comm_bound_check(v, kUnit, phi);
  EXPECT_EQ(bv.toeplitz_lhs, Rational(1));
  EXPECT_EQ(bv.toeplitz_rhs, Rational(2));
  EXPECT_TRUE(bv.ok);

  PolyElement a;
  a.ideal_terms[0] = {{0, generator(3, 2).cast<Rational>()}};
  const auto ba = comm_bound_check(a, kUnit, phi);
  EXPECT_EQ(ba.lhs, Rational(4));
  EXPECT_EQ(ba.constant, Rational(2));
  EXPECT_EQ(ba.rhs, Rational(6));
  EXPECT_TRUE(ba.ok);

  const auto zero = comm_bound_check(PolyElement{}, kUnit, phi);
  EXPECT_EQ(zero.lhs, Rational(0));
  EXPECT_EQ(zero.rhs, Rational(0));
  EXPECT_TRUE(zero.ok);
}

TEST(Spectral, BoundCheckRandom) {
  CaseRng rng(317);
  for (int s : {2, 3}) {
    for (int k = 0; k < 50; ++k) {
      const auto phi = random_hom(rng, s, 60, 3);
      const auto a = random_poly_element(rng, s);
      const auto b = comm_bound_check(a, LambdaParams(Rational(1, 2), 3), phi);
      ASSERT_TRUE(b.ok) << format_rational(b.lhs) << " > " << format_rational(b.rhs);
    }
  }
}

TEST(Spectral, ToeplitzEstimate) {
  const HomT phi(2, {{3, 2}, {5, -1}});
  const ToeplitzSymbol<Rational> sym{{1, Rational(2)}, {-2, Rational(-1, 2)}};
  const double est = toeplitz_commutator_estimate(sym, kUnit, phi, 12);
  EXPECT_LE(est, 2.0 + 1.0 + 1e-9);
  EXPECT_GE(est, 2.0 - 1e-9);
}

TEST(Spectral, ResolventCount) {
  const HomT phi(2, {{3, 1}});
  EXPECT_EQ(resolvent_count(phi, kUnit, 5), 2);
  EXPECT_EQ(resolvent_count(phi, kUnit, 3), 0);
  const HomT psi(3, {{2, -2}, {7, 1}, {13, 3}});
  const LambdaParams p(Rational(2, 3), Rational(1, 5));
  Integer previous = 0;
  for (Rational r = 0; r < 200; r += Rational(1, 3)) {
    const Integer c = resolvent_count(psi, p, r);
    ASSERT_EQ(c, oracle::resolvent_count_by_enumeration(psi, p, r));
    ASSERT_GE(c, previous);
    previous = c;
  }
  EXPECT_GE(previous, 1000);
}

TEST(Spectral, TripleIndex) {
  const HomT phi(2, {{3, 2}, {5, -1}});
  EXPECT_EQ(triple_index(phi, kUnit, generator(3, 2)).index, 2);
  EXPECT_EQ(triple_index(phi, kUnit, generator(5, 2)).index, -1);
  CaseRng rng(331);
  for (int k = 0; k < 40; ++k) {
    const auto psi = random_hom(rng, 3, 100, 5);
    const Integer x = random_hom(rng, 3, 100, 1).coeffs().begin()->first;
    ASSERT_EQ(triple_index(psi, kUnit, generator(x, 3)).index, index_pairing(psi, generator(x, 3)).index);
  }
}
