#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hensel/cylinder.hpp"
#include "hensel/sparse.hpp"

namespace hensel {

/// The finite set of basis vectors E_l, |l| <= M, of l^2(Z).
class Window {
 public:
  explicit Window(Integer half_width);

  Integer half_width() const { return m_; }
  bool contains(Integer l) const { return l >= -m_ && l <= m_; }
  std::vector<Integer> labels() const;
  std::set<Integer> label_set() const;

 private:
  Integer m_;
};

/// A compression P A P of an operator A on l^2(Z) to a window, together with
/// the columns l on which it is faithful: A E_l lies inside the window, so the
/// truncated column equals the infinite one.
template <Scalar S>
struct TruncOp {
  Window window;
  SparseMatrix<S> matrix;
  std::set<Integer> safe_cols;

  /// this * rhs. A column of the product is safe when it is safe for rhs and
  /// every row it lands on is safe for this.
  TruncOp compose(const TruncOp& rhs) const {
    TruncOp out{window, matrix * rhs.matrix, {}};
    for (Integer c : rhs.safe_cols) {
      bool ok = true;
      for (const auto& [r, v] : rhs.matrix.column(c)) {
        if (!safe_cols.contains(r)) {
          ok = false;
          break;
        }
      }
      if (ok) out.safe_cols.insert(c);
    }
    return out;
  }

  TruncOp plus(const TruncOp& rhs) const {
    TruncOp out{window, matrix + rhs.matrix, {}};
    for (Integer c : safe_cols)
      if (rhs.safe_cols.contains(c)) out.safe_cols.insert(c);
    return out;
  }

  TruncOp minus(const TruncOp& rhs) const { return plus(rhs.scaled(S(-ScalarTraits<S>::one()))); }

  TruncOp scaled(const S& k) const { return TruncOp{window, matrix.scaled(k), safe_cols}; }

  template <Scalar T>
  TruncOp<T> cast() const {
    if constexpr (std::is_same_v<T, S>) {
      return *this;
    } else {
      static_assert(std::is_same_v<T, Complex>, "operators can only be widened to complex scalars");
      return TruncOp<T>{window, to_complex(matrix), safe_cols};
    }
  }
};

using RatOp = TruncOp<Rational>;
using ComplexOp = TruncOp<Complex>;

RatOp identity_op(const Window& w);

struct ShiftPair {
  RatOp v;
  RatOp v_star;
};

/// V E_l = E_{sl}; V* E_l = E_{l/s} if s | l, else 0.
ShiftPair build_shift(int s, const Window& w);

/// M_f E_l = f(l) E_l.
RatOp build_mult(const RatCylinder& f, const Window& w);
RatOp build_mult(const IntCylinder& f, const Window& w);

/// m_lambda E_l = lambda(l') E_l for l = s^m l' != 0, and 0 at l = 0.
/// ParameterError unless lambda is tagged as a units function.
RatOp build_m_lambda(const RatCylinder& lambda, const Window& w);
RatOp build_m_lambda(const IntCylinder& lambda, const Window& w);

/// Finitely supported chi: Z_{>=0} -> Q.
using ChiSeq = std::map<Integer, Rational>;

/// chi_p = delta_{mp}.
ChiSeq chi_delta(Integer p);

/// mu_chi E_l = chi(m) E_l for l = s^m l' != 0, and 0 at l = 0.
RatOp build_mu_chi(const ChiSeq& chi, int s, const Window& w);

/// Fourier coefficients m -> phi_m of a trigonometric polynomial.
template <Scalar S>
using ToeplitzSymbol = std::map<Integer, S>;

/// T(phi) = sum_{m>=0} phi_m V^m + sum_{m<0} phi_m (V*)^{-m}.
///
/// Powers of the compressed shifts equal compressions of the powers
/// (|s^k l| is monotone in k), so the matrix is exactly P T(phi) P.
template <Scalar S>
TruncOp<S> build_toeplitz(const ToeplitzSymbol<S>& phi, int s, const Window& w) {
  auto shifts = build_shift(s, w);
  const auto v = shifts.v.cast<S>();
  const auto v_star = shifts.v_star.cast<S>();
  TruncOp<S> total{w, {}, w.label_set()};
  for (const auto& [m, c] : phi) {
    TruncOp<S> term = identity_op(w).cast<S>();
    for (Integer k = 0; k < (m >= 0 ? m : -m); ++k) term = (m >= 0 ? v : v_star).compose(term);
    total = total.plus(term.scaled(c));
  }
  return total;
}

/// phi-bar_m = conj(phi_{-m}); T(phi)* = T(phi-bar).
ToeplitzSymbol<Complex> conjugate_symbol(const ToeplitzSymbol<Complex>& phi);

/// The gauge generator P (E_{s^m l'} -> m E_{s^m l'}, P E_0 = 0) and the
/// conjugation a -> e^{2 pi i theta P} a e^{-2 pi i theta P}.
class Gauge {
 public:
  Gauge(int s, const Window& w);

  const RatOp& generator() const { return p_; }
  Integer degree(Integer l) const;

  ComplexOp conjugate(const Rational& theta, const ComplexOp& a) const;
  ComplexOp conjugate(const Rational& theta, const RatOp& a) const { return conjugate(theta, a.cast<Complex>()); }

 private:
  int s_;
  RatOp p_;
};

/// e^{2 pi i q}, with q reduced mod 1 exactly before going to floating point.
Complex unit_phase(const Rational& q);

struct GaugeReport {
  Integer checked_columns = 0;
  std::vector<Integer> mismatched_columns;
  double max_error = 0.0;
  /// |rho_theta(V) E_0 - e^{2 pi i theta} V E_0|; nonzero unless theta is an integer.
  double zero_column_discrepancy = 0.0;
  bool multiplication_invariant = true;

  bool ok() const { return mismatched_columns.empty() && multiplication_invariant; }
};

/// Checks rho_theta(V) = e^{2 pi i theta} V on safe columns l != 0 and
/// rho_theta(M_f) = M_f, with tolerance 1e-12. The l = 0 column is reported
/// separately.
GaugeReport verify_gauge(const Rational& theta, const IntCylinder& f, const Window& w);

struct StaceyMismatch {
  std::string relation;
  Integer column;
};

struct StaceyReport {
  Integer isometry_checked = 0;    ///< columns checked for V*V = I
  Integer covariance_checked = 0;  ///< columns checked for V M_f V* = M_{alpha f}
  std::vector<StaceyMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Both crossed-product relations, column by column on the safe columns.
StaceyReport verify_stacey(const RatCylinder& f, const Window& w);
StaceyReport verify_stacey(const IntCylinder& f, const Window& w);

/// m_{1_X} (I - V V*) for a 0/1 units function X with X(1) = 0.
RatOp k0_projection(const IntCylinder& x, const Window& w);

/// Throws DomainError unless X is the indicator of a clopen X in Z_s^x with 1 not in X.
void require_k0_indicator(const IntCylinder& x);

}  // namespace hensel
