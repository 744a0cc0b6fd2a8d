#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hensel/khomology.hpp"
#include "hensel/sparse.hpp"

namespace hensel {

enum class Parity { ev, odd };
enum class Sign { plus, minus };

/// Label of a basis vector E^{parity,sign}_{(y,j,l)} of the graded module.
struct GradedBasisIndex {
  Parity parity = Parity::ev;
  Sign sign = Sign::plus;
  Integer y = 0;
  Integer j = 1;
  Integer l = 0;

  friend bool operator==(const GradedBasisIndex&, const GradedBasisIndex&) = default;
};

std::string to_string(const GradedBasisIndex& label);

/// The Hilbert space H_ev + H_odd built from a finitely supported Phi, cut at
/// l <= L_max. Both parities are enumerated in the same order (sign + before
/// -, then y ascending, then j, then l), so a label's position is the same in
/// both halves and G is the identity matrix on positions.
class ModuleTruncation {
 public:
  ModuleTruncation(HomT phi, Integer l_max);

  const HomT& phi() const { return phi_; }
  int base() const { return phi_.base(); }
  Integer l_max() const { return l_max_; }
  /// Per-parity dimension: (sum |phi_(y)|) * (L_max + 1).
  Integer dimension() const { return static_cast<Integer>(labels_.size()); }

  /// Labels of one parity, in position order.
  std::vector<GradedBasisIndex> basis(Parity parity) const;
  GradedBasisIndex label(Parity parity, Integer position) const;
  /// Position of (sign, y, j, l); -1 when outside the truncation.
  Integer position(Sign sign, Integer y, Integer j, Integer l) const;

  /// The point u such that rho_parity(M_f) acts on the label by f(s^l u):
  /// gamma(y) on ev/+ and odd/-, y on ev/- and odd/+.
  Integer evaluation_point(Parity parity, Sign sign, Integer y) const;

  std::vector<Integer> positions() const;

 private:
  struct Slot {
    Sign sign;
    Integer y;
    Integer j;
    Integer l;
  };
  HomT phi_;
  Integer l_max_;
  std::vector<Slot> labels_;
  std::map<std::tuple<int, Integer, Integer, Integer>, Integer> index_;
};

/// Matrix on module positions plus the columns where it agrees with the
/// untruncated operator.
struct ModuleOp {
  SparseMatrix<Rational> matrix;
  std::set<Integer> safe_cols;
};

/// V.
struct ShiftGenerator {};
/// M_f for a cylinder function f on Z_s.
struct MultGenerator {
  RatCylinder f;
};
/// m_lambda mu_{chi_p}, with lambda a units function (1_(x) in the generator set).
struct IdealGenerator {
  RatCylinder lambda;
  Integer p = 0;
};

using Generator = std::variant<ShiftGenerator, MultGenerator, IdealGenerator>;

/// m_{1_(x)} mu_{chi_p}.
IdealGenerator ideal_generator(Integer x, Integer p, int s);

/// rho_ev or rho_odd of a generator.
ModuleOp represent(const Generator& gen, const ModuleTruncation& mt, Parity parity);

/// rho(V^n) for n >= 0, rho((V*)^{-n}) for n < 0.
ModuleOp represent_shift_power(Integer n, const ModuleTruncation& mt, Parity parity);

struct FredholmOperators {
  SparseMatrix<Rational> g;      ///< H_odd -> H_ev
  SparseMatrix<Rational> f;      ///< [[0, G], [G*, 0]] on H_ev + H_odd
  SparseMatrix<Rational> gamma;  ///< +1 on H_ev, -1 on H_odd
};

/// On the full space, ev positions are [0, D) and odd positions are [D, 2D).
FredholmOperators build_F_Gamma(const ModuleTruncation& mt);

/// rho_ev + rho_odd as a block-diagonal matrix on the full space.
SparseMatrix<Rational> represent_full(const Generator& gen, const ModuleTruncation& mt);

/// G rho_odd(a) - rho_ev(a) G, the odd -> ev block of [F, rho(a)].
ModuleOp commutator_F(const Generator& gen, const ModuleTruncation& mt);

struct AxiomReport {
  bool f_squared_identity = false;
  bool f_self_adjoint = false;
  bool gamma_anticommutes = false;
  bool gamma_commutes_with_rep = false;
  bool gamma_involution = false;
  bool g_unitary = false;

  bool ok() const {
    return f_squared_identity && f_self_adjoint && gamma_anticommutes && gamma_commutes_with_rep &&
           gamma_involution && g_unitary;
  }
};

/// Even Fredholm module axioms on the truncation, exact; Gamma rho(a) = rho(a) Gamma
/// is checked for every generator in `gens`.
AxiomReport check_module_axioms(const ModuleTruncation& mt, const std::vector<Generator>& gens);

struct IndexReport {
  Integer index = 0;
  Integer kernel_dim = 0;
  Integer cokernel_dim = 0;
  Integer domain_dim = 0;    ///< dim Ran rho_odd(P)
  Integer codomain_dim = 0;  ///< dim Ran rho_ev(P)
  std::vector<GradedBasisIndex> kernel_witnesses;
  std::vector<GradedBasisIndex> cokernel_witnesses;
};

/// Index of rho_ev(P) A rho_odd(P) : Ran rho_odd(P) -> Ran rho_ev(P), where
/// P is a diagonal 0/1 projection in both parities and A maps odd to ev.
IndexReport compressed_index(const ModuleTruncation& mt, const SparseMatrix<Rational>& odd_to_ev,
                             const SparseMatrix<Rational>& p_ev, const SparseMatrix<Rational>& p_odd);

/// <[m_{1_X}(I - VV*)], module(Phi)> = ind(B_X). P confines both ranges to
/// the l = 0 slice, so the result does not depend on `l_max`.
IndexReport index_pairing(const HomT& phi, const IntCylinder& x, Integer l_max = 0);

/// Pairing with the class of the identity: the index of G.
Integer pairing_identity(const HomT& phi, Integer l_max = 0);

/// K0 classes accepted by the one-dimensional module.
struct IdentityClass {};
struct RangeComplementClass {};  ///< I - V V*
struct K0GeneratorClass {
  IntCylinder x;
};
using K0Class = std::variant<IdentityClass, RangeComplementClass, K0GeneratorClass>;

/// The module with H_ev = 0, H_odd = C, V -> 1, M_f -> f(0), G = 0.
Integer eta_pairing(const K0Class& cls);

}  // namespace hensel
