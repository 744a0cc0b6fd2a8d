#pragma once

// Brute-force reference computations. Each one follows the defining formula
// directly and shares no code path with the production algorithm it checks.

#include <map>

#include "hensel/cylinder.hpp"
#include "hensel/khomology.hpp"
#include "hensel/spectral.hpp"

namespace hensel::oracle {

/// max |f(a) - f(b)| / |a - b|_s over all pairs of distinct unit residues.
Rational lipschitz_all_pairs(const RatCylinder& f);
Rational lipschitz_all_pairs(const IntCylinder& f);

/// The integer sum_j d_j s^j (fits only for small precision).
Integer digits_value(const SAdic& x);

/// 1_(x)(z) straight from "s^{n(x)} divides z - x".
Integer generator_value(Integer x, Integer z, int s);

/// sum c_x 1_(x)(z).
Integer expansion_value(const Expansion& coeffs, Integer z, int s);

/// Phi(f) by the definition: sum_y phi_y (f(y) - f(gamma(y))).
Integer pairing_by_definition(const HomT& phi, const IntCylinder& f);

/// #{(y, j, l) : Lambda(y, l) <= R} by enumerating l.
Integer resolvent_count_by_enumeration(const HomT& phi, const LambdaParams& p, const Rational& r);

/// Lambda(y,l) |F(l,y) - F(l,gamma(y))| maximized over y in supp(phi), l in supp(F).
Rational mult_commutator_by_labels(const CylinderFamily& family, const LambdaParams& p, const HomT& phi);

}  // namespace hensel::oracle
