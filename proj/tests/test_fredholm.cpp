#include <gtest/gtest.h>

#include "hensel/fredholm.hpp"
#include "hensel/oracle.hpp"
#include "hensel/suite.hpp"

using namespace hensel;

namespace {

const HomT kPhi(2, {{3, 2}, {5, -1}});

}  // namespace

TEST(Fredholm, BasisDimensions) {
  EXPECT_EQ(ModuleTruncation(kPhi, 1).dimension(), 6);
  EXPECT_EQ(ModuleTruncation(HomT(2), 3).dimension(), 0);
  EXPECT_EQ(ModuleTruncation(HomT(2, {{3, 1}}), 0).dimension(), 1);
  EXPECT_THROW(ModuleTruncation(kPhi, -1), ParameterError);
}

TEST(Fredholm, BasisOrder) {
  const ModuleTruncation mt(kPhi, 1);
  const auto odd = mt.basis(Parity::odd);
  ASSERT_EQ(odd.size(), 6u);
  EXPECT_EQ(to_string(odd[0]), "odd,+,(3,1,0)");
  EXPECT_EQ(to_string(odd[1]), "odd,+,(3,1,1)");
  EXPECT_EQ(to_string(odd[2]), "odd,+,(3,2,0)");
  EXPECT_EQ(to_string(odd[5]), "odd,-,(5,1,1)");
  EXPECT_EQ(mt.position(Sign::minus, 5, 1, 0), 4);
  EXPECT_EQ(mt.position(Sign::plus, 5, 1, 0), -1);
  const auto ev = mt.basis(Parity::ev);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    EXPECT_EQ(ev[i].parity, Parity::ev);
    EXPECT_EQ(ev[i].y, odd[i].y);
    EXPECT_EQ(ev[i].l, odd[i].l);
  }
}

TEST(Fredholm, MultiplicationRules) {
  const ModuleTruncation mt(HomT(2, {{3, 2}}), 0);
  const Generator m = MultGenerator{generator(3, 2).cast<Rational>()};
  const Integer pos = mt.position(Sign::plus, 3, 1, 0);
  EXPECT_EQ(represent(m, mt, Parity::odd).matrix.get(pos, pos), Rational(1));
  EXPECT_EQ(represent(m, mt, Parity::ev).matrix.get(pos, pos), Rational(0));

  // ev/- evaluates at y, odd/- at gamma(y)
  const ModuleTruncation neg(HomT(2, {{3, -1}}), 0);
  EXPECT_EQ(represent(m, neg, Parity::ev).matrix.get(0, 0), Rational(1));
  EXPECT_EQ(represent(m, neg, Parity::odd).matrix.get(0, 0), Rational(0));
}

TEST(Fredholm, MultiplicationMatchesDefinition) {
  CaseRng rng(211);
  for (int s : {2, 3}) {
    const auto phi = random_hom(rng, s, 40, 4);
    const ModuleTruncation mt(phi, 3);
    const auto f = random_full_function(rng, s, 3);
    const Generator m = MultGenerator{f.cast<Rational>()};
    for (Parity parity : {Parity::ev, Parity::odd}) {
      const auto rep = represent(m, mt, parity).matrix;
      for (Integer pos = 0; pos < mt.dimension(); ++pos) {
        const auto lab = mt.label(parity, pos);
        const Integer g = gamma_of(lab.y, s);
        const bool at_y = (parity == Parity::odd) == (lab.sign == Sign::plus);
        const Integer point = checked_pow(s, static_cast<int>(lab.l)) * (at_y ? lab.y : g);
        ASSERT_EQ(rep.get(pos, pos), Rational(static_cast<long>(f(point))));
      }
    }
  }
}

TEST(Fredholm, ShiftRepresentation) {
  CaseRng rng(223);
  for (int s : {2, 3}) {
    const auto phi = random_hom(rng, s, 40, 3);
    const ModuleTruncation mt(phi, 4);
    for (Parity parity : {Parity::ev, Parity::odd}) {
      const auto v = represent_shift_power(1, mt, parity);
      const auto vs = represent_shift_power(-1, mt, parity);
      const auto vv = vs.matrix * v.matrix;
      for (Integer c : v.safe_cols) {
        ASSERT_EQ(vv.column(c).size(), 1u);
        ASSERT_EQ(vv.get(c, c), Rational(1));
      }
      const auto f = random_full_function(rng, s, 2);
      const auto lhs = v.matrix * represent(MultGenerator{f.cast<Rational>()}, mt, parity).matrix * vs.matrix;
      const auto rhs = represent(MultGenerator{alpha_endo(f).cast<Rational>()}, mt, parity).matrix;
      // columns at l = 0 are killed by V*; alpha(f) vanishes on s^0 units.
      ASSERT_EQ(lhs, rhs);
    }
  }
}

TEST(Fredholm, Axioms) {
  for (Integer l_max : {0, 1, 4}) {
    const ModuleTruncation mt(kPhi, l_max);
    const auto rep = check_module_axioms(
        mt, {ShiftGenerator{}, MultGenerator{indicator(2, 1, 2).cast<Rational>()}, ideal_generator(3, 0, 2)});
    EXPECT_TRUE(rep.ok());
    EXPECT_TRUE(rep.g_unitary);
    EXPECT_TRUE(rep.gamma_involution);
  }
}

TEST(Fredholm, Commutators) {
  const ModuleTruncation mt(HomT(2, {{3, 2}}), 3);
  const auto cv = commutator_F(ShiftGenerator{}, mt);
  EXPECT_TRUE(cv.matrix.restrict_columns(cv.safe_cols).empty());

  const auto ci = commutator_F(ideal_generator(3, 0, 2), mt);
  EXPECT_EQ(rank(ci.matrix), 2);
  for (Integer j = 1; j <= 2; ++j) {
    const Integer pos = mt.position(Sign::plus, 3, j, 0);
    EXPECT_EQ(ci.matrix.get(pos, pos), Rational(1));
  }
  EXPECT_EQ(ci.matrix.nonzeros(), 2u);

  // 9 is not in supp(Phi) and no gamma orbit of supp(Phi) reaches it
  const auto cz = commutator_F(ideal_generator(9, 1, 2), mt);
  EXPECT_EQ(rank(cz.matrix), 0);
}

TEST(Fredholm, CommutatorEntriesAndRankStability) {
  CaseRng rng(227);
  for (int s : {2, 3}) {
    for (int k = 0; k < 30; ++k) {
      const auto phi = random_hom(rng, s, 50, 4);
      const Integer x = rng.uniform(0, 1) == 0 ? phi.coeffs().begin()->first : random_hom(rng, s, 50, 1).coeffs().begin()->first;
      const Integer p = rng.uniform(0, 3);
      const auto gen = ideal_generator(x, p, s);
      Integer stable = -1;
      for (Integer l_max = 0; l_max <= 6; ++l_max) {
        const ModuleTruncation mt(phi, l_max);
        const auto c = commutator_F(gen, mt);
        for (Integer pos = 0; pos < mt.dimension(); ++pos) {
          const auto lab = mt.label(Parity::odd, pos);
          const Integer e = lab.l == p ? oracle::generator_value(x, lab.y, s) -
                                             (gamma_of(lab.y, s) == 0 ? 0 : oracle::generator_value(x, gamma_of(lab.y, s), s))
                                       : 0;
          const Integer want = lab.sign == Sign::plus ? e : -e;
          ASSERT_EQ(c.matrix.get(pos, pos), Rational(static_cast<long>(want)));
        }
        const Integer r = rank(c.matrix);
        if (l_max < p) {
          ASSERT_EQ(r, 0);
        } else {
          if (stable >= 0) {
            ASSERT_EQ(r, stable);
          }
          stable = r;
          ASSERT_EQ(r, std::abs(phi.coefficient(x)));
        }
      }
    }
  }
}

TEST(Fredholm, IndexExamples) {
  const auto a = index_pairing(kPhi, generator(3, 2));
  EXPECT_EQ(a.index, 2);
  EXPECT_EQ(a.kernel_dim, 2);
  EXPECT_EQ(a.cokernel_dim, 0);
  ASSERT_EQ(a.kernel_witnesses.size(), 2u);
  EXPECT_EQ(to_string(a.kernel_witnesses[0]), "odd,+,(3,1,0)");

  const auto b = index_pairing(kPhi, generator(5, 2));
  EXPECT_EQ(b.index, -1);
  EXPECT_EQ(b.domain_dim, 0);
  EXPECT_EQ(b.codomain_dim, 1);
  ASSERT_EQ(b.cokernel_witnesses.size(), 1u);
  EXPECT_EQ(to_string(b.cokernel_witnesses[0]), "ev,-,(5,1,0)");

  const auto c = index_pairing(kPhi, generator(7, 2));
  EXPECT_EQ(c.index, 0);
  EXPECT_EQ(c.domain_dim, 0);
  EXPECT_EQ(c.codomain_dim, 0);
  EXPECT_EQ(pair(kPhi, generator(7, 2)), 0);

  EXPECT_EQ(index_pairing(kPhi, generator(3, 2), 5).index, 2);
  EXPECT_THROW(index_pairing(kPhi, indicator(1, 1, 2)), DomainError);
}

TEST(Fredholm, IndexEqualsPairingForAnyClopenSet) {
  CaseRng rng(229);
  for (int s : {2, 3, 5}) {
    for (int k = 0; k < 40; ++k) {
      const auto phi = random_hom(rng, s, 100, 5);
      const int level = static_cast<int>(rng.uniform(1, 4));
      std::vector<Integer> values(static_cast<std::size_t>(checked_pow(s, level)), 0);
      for (std::size_t r = 2; r < values.size(); ++r)
        if (r % static_cast<std::size_t>(s) != 0) values[r] = rng.uniform(0, 1);
      const IntCylinder x(s, level, Domain::units, values);
      ASSERT_EQ(index_pairing(phi, x).index, pair(phi, x));
      ASSERT_EQ(index_pairing(phi, x).index, pair(phi, reconstruct(expand(x), s)));
    }
  }
}

TEST(Fredholm, PairingIdentity) {
  EXPECT_EQ(pairing_identity(kPhi), 0);
  EXPECT_EQ(pairing_identity(HomT(2)), 0);
  EXPECT_EQ(pairing_identity(HomT(2, {{3, 5}}), 3), 0);
}

TEST(Fredholm, Eta) {
  EXPECT_EQ(eta_pairing(IdentityClass{}), 1);
  EXPECT_EQ(eta_pairing(K0GeneratorClass{generator(3, 2)}), 0);
  EXPECT_EQ(eta_pairing(RangeComplementClass{}), 0);
}
