#pragma once

#include <map>
#include <optional>

#include "hensel/fredholm.hpp"
#include "hensel/operators.hpp"

namespace hensel {

/// Lambda(y, l) = c1 l + c2 s^{n(y)}, with c1, c2 > 0.
struct LambdaParams {
  Rational c1;
  Rational c2;

  LambdaParams(Rational c1_, Rational c2_);
};

Rational lambda_val(Integer y, Integer l, const LambdaParams& p, int s);

struct DiracOperators {
  SparseMatrix<Rational> d;     ///< H_odd -> H_ev, diagonal in labels
  SparseMatrix<Rational> dirac; ///< [[0, D], [D*, 0]] on H_ev + H_odd
};

DiracOperators build_D(const ModuleTruncation& mt, const LambdaParams& p);

/// A family l -> F(l, .) of units cylinder functions, finitely supported in l.
/// As an operator it is M_F with F(l, u) = f(s^l u).
using CylinderFamily = std::map<Integer, RatCylinder>;

/// A polynomial element
///   sum_m phi_m V^m (+ (V*)^{-m})  +  sum_n V^n M_{F_n} (n >= 0) / M_{F_n} (V*)^{-n} (n < 0),
/// with all supports finite.
struct PolyElement {
  ToeplitzSymbol<Rational> toeplitz;
  std::map<Integer, CylinderFamily> ideal_terms;
};

/// D rho_odd(a) - rho_ev(a) D for a = V^n (n >= 0) or (V*)^{-n}.
SparseMatrix<Rational> commutator_D_shift(Integer n, const ModuleTruncation& mt, const LambdaParams& p);

/// D rho_odd(a) - rho_ev(a) D for a = V^n M_F (n >= 0) or M_F (V*)^{-n} (n < 0).
SparseMatrix<Rational> commutator_D_term(Integer n, const CylinderFamily& family, const ModuleTruncation& mt,
                                         const LambdaParams& p);

struct ShiftNorm {
  Rational exact;   ///< c1 |m| for a nonempty module, 0 otherwise
  Rational entry_scan;  ///< max |entry| of the assembled truncated commutator
  double estimate = 0.0;  ///< power-iteration norm of the same matrix
};

/// ||[D, rho(V^m)]||.
ShiftNorm comm_norm_shift(Integer m, const LambdaParams& p, const HomT& phi, Integer l_max);

struct MultNorm {
  Rational exact;
  Rational bound;
  /// Label (y, sign, l) attaining `exact`, if the commutator is nonzero.
  std::optional<GradedBasisIndex> exact_witness;
  /// Label where the bound's supremum is attained.
  std::optional<GradedBasisIndex> bound_witness;
};

/// ||[D, rho(M_F)]|| exactly, and sup Lambda(y,l) ||F(l,.)||_L s^{-(n(y)-1)}
/// over the same labels. The sup is a finite max: the difference
/// F(l, y) - F(l, gamma(y)) vanishes once n(y) exceeds the level of F(l, .).
MultNorm comm_norm_mult(const CylinderFamily& family, const LambdaParams& p, const HomT& phi);

/// ||a||_N = sum (1+|m|)^N |phi_m| + sum (1+|m|+|n|)^N ||F_n(m,.)||_L.
Rational frechet_norm(const PolyElement& a, Integer order);

/// max(s max(c1, c2), c1): from s(c1 l + c2) + c1 |n| <= C (1 + l + |n|).
Rational commutator_constant(const LambdaParams& p, int s);

struct BoundReport {
  Rational lhs;       ///< sum over terms of exact term commutator norms
  Rational constant;  ///< C
  Rational norm1;     ///< ||a||_1
  Rational rhs;       ///< C ||a||_1
  Rational toeplitz_lhs;
  Rational toeplitz_rhs;  ///< c1 ||phi||_1
  bool ok = false;
};

/// Triangle-inequality bound on ||[D, rho(a)]|| against C ||a||_1 and the
/// Toeplitz part against c1 ||phi||_1.
BoundReport comm_bound_check(const PolyElement& a, const LambdaParams& p, const HomT& phi);

/// Float estimate of ||[D, rho(T(phi))]|| on the columns l <= L_max - max shift.
double toeplitz_commutator_estimate(const ToeplitzSymbol<Rational>& phi, const LambdaParams& p, const HomT& hom,
                                    Integer l_max);

/// Number of labels per parity with Lambda(y, l) <= R.
Integer resolvent_count(const HomT& phi, const LambdaParams& p, const Rational& r);

/// Index of rho_ev(P_X) D rho_odd(P_X).
IndexReport triple_index(const HomT& phi, const LambdaParams& p, const IntCylinder& x, Integer l_max = 0);

}  // namespace hensel
