#include "hensel/spectral.hpp"

#include <cstdlib>

namespace hensel {

LambdaParams::LambdaParams(Rational c1_, Rational c2_) : c1(std::move(c1_)), c2(std::move(c2_)) {
  c1.canonicalize();
  c2.canonicalize();
  if (c1 <= 0 || c2 <= 0) throw ParameterError("Lambda needs c1 > 0 and c2 > 0");
}

namespace {

Rational power_of(int s, int n) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(n));
  return Rational(v);
}

Rational lambda_at(const ModuleTruncation& mt, Integer pos, const LambdaParams& p) {
  const auto lab = mt.label(Parity::odd, pos);
  return lambda_val(lab.y, lab.l, p, mt.base());
}

/// M_F on one parity: entry F(l, u) at a label (y, l) with evaluation point u.
SparseMatrix<Rational> represent_family(const CylinderFamily& family, const ModuleTruncation& mt, Parity parity) {
  SparseMatrix<Rational> out;
  for (Integer pos = 0; pos < mt.dimension(); ++pos) {
    const auto lab = mt.label(parity, pos);
    auto it = family.find(lab.l);
    if (it == family.end()) continue;
    const Integer u = mt.evaluation_point(parity, lab.sign, lab.y);
    if (u == 0) continue;  // f(0) = 0 for elements of the ideal
    out.set(pos, pos, it->second(u));
  }
  return out;
}

void require_units_family(const CylinderFamily& family, int s) {
  for (const auto& [l, f] : family) {
    if (l < 0) throw ParameterError("family index l must be >= 0");
    if (f.base() != s) throw ParameterError("family base differs from module base");
    if (!f.vanishes_off_units()) throw DomainError("family member is not a units function");
  }
}

Integer family_reach(const CylinderFamily& family) { return family.empty() ? 0 : family.rbegin()->first; }

}  // namespace

Rational lambda_val(Integer y, Integer l, const LambdaParams& p, int s) {
  if (l < 0) throw ParameterError("l must be >= 0");
  TIndex checked(y, s);
  return p.c1 * Rational(static_cast<long>(l)) + p.c2 * power_of(s, level_of(checked.value(), s));
}

DiracOperators build_D(const ModuleTruncation& mt, const LambdaParams& p) {
  DiracOperators out;
  const Integer d = mt.dimension();
  for (Integer pos = 0; pos < d; ++pos) {
    const Rational lam = lambda_at(mt, pos, p);
    out.d.set(pos, pos, lam);
    out.dirac.set(pos, d + pos, lam);
    out.dirac.set(d + pos, pos, lam);
  }
  return out;
}

SparseMatrix<Rational> commutator_D_shift(Integer n, const ModuleTruncation& mt, const LambdaParams& p) {
  const auto d = build_D(mt, p).d;
  const auto odd = represent_shift_power(n, mt, Parity::odd).matrix;
  const auto ev = represent_shift_power(n, mt, Parity::ev).matrix;
  return d * odd - ev * d;
}

SparseMatrix<Rational> commutator_D_term(Integer n, const CylinderFamily& family, const ModuleTruncation& mt,
                                         const LambdaParams& p) {
  require_units_family(family, mt.base());
  const auto d = build_D(mt, p).d;
  auto rep = [&](Parity parity) {
    const auto shift = represent_shift_power(n, mt, parity).matrix;
    const auto mult = represent_family(family, mt, parity);
    return n >= 0 ? shift * mult : mult * shift;
  };
  return d * rep(Parity::odd) - rep(Parity::ev) * d;
}

ShiftNorm comm_norm_shift(Integer m, const LambdaParams& p, const HomT& phi, Integer l_max) {
  if (m < 0) throw ParameterError("shift power must be >= 0");
  ShiftNorm out;
  if (phi.empty()) return out;
  if (l_max < m) throw ParameterError("L_max must be >= m to see the commutator");
  ModuleTruncation mt(phi, l_max);
  const auto c = commutator_D_shift(m, mt, p);
  out.exact = p.c1 * Rational(static_cast<long>(m));
  out.entry_scan = max_abs_entry(c);
  out.estimate = estimate_norm(c);
  return out;
}

MultNorm comm_norm_mult(const CylinderFamily& family, const LambdaParams& p, const HomT& phi) {
  const int s = phi.base();
  require_units_family(family, s);
  MultNorm out;
  if (phi.empty() || family.empty()) return out;

  // The commutator is diagonal in labels, so it is assembled exactly on the
  // slices l <= max supp F.
  ModuleTruncation mt(phi, family_reach(family));
  const auto c = commutator_D_term(0, family, mt, p);
  for (const auto& [col, entries] : c.columns()) {
    const Rational v = abs(entries.begin()->second);
    if (v > out.exact) {
      out.exact = v;
      out.exact_witness = mt.label(Parity::odd, col);
    }
  }

  std::map<Integer, Rational> lip;
  for (const auto& [l, f] : family) lip[l] = lipschitz(f).norm;
  bool first = true;
  for (Integer pos = 0; pos < mt.dimension(); ++pos) {
    const auto lab = mt.label(Parity::odd, pos);
    auto it = lip.find(lab.l);
    if (it == lip.end()) continue;
    const Rational b = lambda_val(lab.y, lab.l, p, s) * it->second * inverse_power(s, level_of(lab.y, s) - 1);
    if (first || b > out.bound) {
      out.bound = b;
      out.bound_witness = lab;
      first = false;
    }
  }
  return out;
}

Rational frechet_norm(const PolyElement& a, Integer order) {
  if (order < 0) throw ParameterError("Frechet order must be >= 0");
  auto weight = [&](Integer base) {
    Rational w = 1;
    for (Integer k = 0; k < order; ++k) w *= Rational(static_cast<long>(base));
    return w;
  };
  Rational total = 0;
  for (const auto& [m, c] : a.toeplitz) total += weight(1 + std::abs(m)) * abs(c);
  for (const auto& [n, family] : a.ideal_terms)
    for (const auto& [m, f] : family) total += weight(1 + std::abs(m) + std::abs(n)) * lipschitz(f).norm;
  return total;
}

Rational commutator_constant(const LambdaParams& p, int s) {
  const Rational big = p.c1 > p.c2 ? p.c1 : p.c2;
  const Rational c = Rational(s) * big;
  return c > p.c1 ? c : p.c1;
}

BoundReport comm_bound_check(const PolyElement& a, const LambdaParams& p, const HomT& phi) {
  const int s = phi.base();
  BoundReport out;
  out.constant = commutator_constant(p, s);
  out.norm1 = frechet_norm(a, 1);
  out.rhs = out.constant * out.norm1;

  Rational phi_norm1 = 0;
  for (const auto& [m, c] : a.toeplitz) phi_norm1 += Rational(static_cast<long>(1 + std::abs(m))) * abs(c);
  out.toeplitz_rhs = p.c1 * phi_norm1;

  if (!phi.empty()) {
    for (const auto& [m, c] : a.toeplitz) {
      if (m == 0 || c == 0) continue;
      ModuleTruncation mt(phi, std::abs(m));
      const auto comm = commutator_D_shift(m, mt, p);
      out.toeplitz_lhs += abs(c) * max_abs_entry(comm);
    }
    out.lhs = out.toeplitz_lhs;
    for (const auto& [n, family] : a.ideal_terms) {
      for (const auto& [m, f] : family) {
        const CylinderFamily single{{m, f}};
        ModuleTruncation mt(phi, m + std::abs(n));
        const auto comm = commutator_D_term(n, single, mt, p);
        if (!comm.is_monomial()) throw std::logic_error("single-term commutator is not monomial");
        out.lhs += max_abs_entry(comm);
      }
    }
  }
  out.ok = out.lhs <= out.rhs && out.toeplitz_lhs <= out.toeplitz_rhs;
  return out;
}

double toeplitz_commutator_estimate(const ToeplitzSymbol<Rational>& phi, const LambdaParams& p, const HomT& hom,
                                    Integer l_max) {
  if (hom.empty()) return 0.0;
  ModuleTruncation mt(hom, l_max);
  SparseMatrix<Rational> total;
  Integer reach = 0;
  for (const auto& [m, c] : phi) {
    total = total + commutator_D_shift(m, mt, p).scaled(c);
    reach = std::max(reach, m);
  }
  std::set<Integer> safe;
  for (Integer pos = 0; pos < mt.dimension(); ++pos)
    if (mt.label(Parity::odd, pos).l + reach <= l_max) safe.insert(pos);
  return estimate_norm(total.restrict_columns(safe));
}

Integer resolvent_count(const HomT& phi, const LambdaParams& p, const Rational& r) {
  Integer total = 0;
  for (const auto& [y, c] : phi.coeffs()) {
    const Rational slack = (r - lambda_val(y, 0, p, phi.base())) / p.c1;
    if (slack < 0) continue;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), slack.get_num_mpz_t(), slack.get_den_mpz_t());
    total += std::abs(c) * (fl.get_si() + 1);
  }
  return total;
}

IndexReport triple_index(const HomT& phi, const LambdaParams& p, const IntCylinder& x, Integer l_max) {
  if (phi.base() != x.base()) throw ParameterError("homomorphism and set have different bases");
  require_k0_indicator(x);
  ModuleTruncation mt(phi, l_max);
  const Generator proj = IdealGenerator{x.as_units().cast<Rational>(), 0};
  return compressed_index(mt, build_D(mt, p).d, represent(proj, mt, Parity::ev).matrix,
                          represent(proj, mt, Parity::odd).matrix);
}

}  // namespace hensel
