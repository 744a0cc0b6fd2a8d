#include "hensel/oracle.hpp"

#include <cstdlib>

namespace hensel::oracle {

Rational lipschitz_all_pairs(const RatCylinder& f) {
  const int s = f.base();
  Rational best = 0;
  for (Integer a = 0; a < f.modulus(); ++a) {
    if (a % s == 0) continue;
    for (Integer b = a + 1; b < f.modulus(); ++b) {
      if (b % s == 0) continue;
      const Rational dist = norm_valuation(a - b, s).value;
      const Rational ratio = abs(Rational(f(a) - f(b))) / dist;
      if (ratio > best) best = ratio;
    }
  }
  return best;
}

Rational lipschitz_all_pairs(const IntCylinder& f) { return lipschitz_all_pairs(f.cast<Rational>()); }

Integer digits_value(const SAdic& x) {
  Integer v = 0;
  Integer place = 1;
  for (int d : x.digits()) {
    v += d * place;
    place *= x.base();
  }
  return v;
}

Integer generator_value(Integer x, Integer z, int s) {
  Integer mod = 1;
  Integer t = x;
  while (t >= 1) {  // s^{n(x)} is the least power of s exceeding x
    mod *= s;
    t /= s;
  }
  return (z - x) % mod == 0 ? 1 : 0;
}

Integer expansion_value(const Expansion& coeffs, Integer z, int s) {
  Integer total = 0;
  for (const auto& [x, c] : coeffs) total += c * generator_value(x, z, s);
  return total;
}

Integer pairing_by_definition(const HomT& phi, const IntCylinder& f) {
  const int s = phi.base();
  Integer total = 0;
  for (const auto& [y, c] : phi.coeffs()) {
    Integer lead = 1;
    while (lead * s <= y) lead *= s;
    total += c * (f(y) - f(y % lead));
  }
  return total;
}

Integer resolvent_count_by_enumeration(const HomT& phi, const LambdaParams& p, const Rational& r) {
  Integer total = 0;
  for (const auto& [y, c] : phi.coeffs()) {
    for (Integer l = 0;; ++l) {
      if (lambda_val(y, l, p, phi.base()) > r) break;
      total += std::abs(c);
    }
  }
  return total;
}

Rational mult_commutator_by_labels(const CylinderFamily& family, const LambdaParams& p, const HomT& phi) {
  const int s = phi.base();
  Rational best = 0;
  for (const auto& [y, c] : phi.coeffs()) {
    Integer lead = 1;
    while (lead * s <= y) lead *= s;
    const Integer g = y % lead;
    for (const auto& [l, f] : family) {
      const Rational diff = abs(Rational(f(y) - (g == 0 ? Rational(0) : f(g))));
      const Rational v = lambda_val(y, l, p, s) * diff;
      if (v > best) best = v;
    }
  }
  return best;
}

}  // namespace hensel::oracle
