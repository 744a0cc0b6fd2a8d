#include "hensel/operators.hpp"

#include <cmath>
#include <numbers>

#include "hensel/sadic.hpp"

namespace hensel {

Window::Window(Integer half_width) : m_(half_width) {
  if (half_width < 1) throw ParameterError("window half-width must be >= 1");
}

std::vector<Integer> Window::labels() const {
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(2 * m_ + 1));
  for (Integer l = -m_; l <= m_; ++l) out.push_back(l);
  return out;
}

std::set<Integer> Window::label_set() const {
  auto ls = labels();
  return {ls.begin(), ls.end()};
}

RatOp identity_op(const Window& w) {
  return RatOp{w, SparseMatrix<Rational>::identity(w.labels()), w.label_set()};
}

ShiftPair build_shift(int s, const Window& w) {
  if (s < 2) throw ParameterError("base must be >= 2");
  ShiftPair out{RatOp{w, {}, {}}, RatOp{w, {}, w.label_set()}};
  const Integer m = w.half_width();
  for (Integer l = -m; l <= m; ++l) {
    if (w.contains(s * l)) {
      out.v.matrix.set(s * l, l, 1);
      out.v.safe_cols.insert(l);
    }
    if (l % s == 0) out.v_star.matrix.set(l / s, l, 1);
  }
  return out;
}

RatOp build_mult(const RatCylinder& f, const Window& w) {
  RatOp out{w, {}, w.label_set()};
  for (Integer l : w.labels()) out.matrix.set(l, l, f(l));
  return out;
}

RatOp build_mult(const IntCylinder& f, const Window& w) { return build_mult(f.cast<Rational>(), w); }

RatOp build_m_lambda(const RatCylinder& lambda, const Window& w) {
  if (lambda.domain() != Domain::units) throw ParameterError("m_lambda needs a units-domain function");
  RatOp out{w, {}, w.label_set()};
  for (Integer l : w.labels()) {
    if (l == 0) continue;
    out.matrix.set(l, l, lambda(valuation(l, lambda.base()).unit_part));
  }
  return out;
}

RatOp build_m_lambda(const IntCylinder& lambda, const Window& w) { return build_m_lambda(lambda.cast<Rational>(), w); }

ChiSeq chi_delta(Integer p) {
  if (p < 0) throw ParameterError("chi_p needs p >= 0");
  return {{p, Rational(1)}};
}

RatOp build_mu_chi(const ChiSeq& chi, int s, const Window& w) {
  if (s < 2) throw ParameterError("base must be >= 2");
  RatOp out{w, {}, w.label_set()};
  for (Integer l : w.labels()) {
    if (l == 0) continue;
    auto it = chi.find(valuation(l, s).m);
    if (it != chi.end()) out.matrix.set(l, l, it->second);
  }
  return out;
}

ToeplitzSymbol<Complex> conjugate_symbol(const ToeplitzSymbol<Complex>& phi) {
  ToeplitzSymbol<Complex> out;
  for (const auto& [m, c] : phi) out[-m] = std::conj(c);
  return out;
}

Gauge::Gauge(int s, const Window& w) : s_(s), p_{w, {}, w.label_set()} {
  if (s < 2) throw ParameterError("base must be >= 2");
  for (Integer l : w.labels()) p_.matrix.set(l, l, Rational(static_cast<long>(degree(l))));
}

Integer Gauge::degree(Integer l) const { return l == 0 ? 0 : valuation(l, s_).m; }

Complex unit_phase(const Rational& q) {
  // q - floor(q) in [0, 1)
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  const Rational frac = q - Rational(fl);
  const double angle = 2.0 * std::numbers::pi * frac.get_d();
  return {std::cos(angle), std::sin(angle)};
}

ComplexOp Gauge::conjugate(const Rational& theta, const ComplexOp& a) const {
  ComplexOp out{a.window, {}, a.safe_cols};
  for (const auto& [c, col] : a.matrix.columns()) {
    for (const auto& [r, v] : col) {
      const Rational q = theta * Rational(static_cast<long>(degree(r) - degree(c)));
      out.matrix.set(r, c, v * unit_phase(q));
    }
  }
  return out;
}

GaugeReport verify_gauge(const Rational& theta, const IntCylinder& f, const Window& w) {
  constexpr double tol = 1e-12;
  const int s = f.base();
  Gauge gauge(s, w);
  const auto shifts = build_shift(s, w);
  const auto rotated = gauge.conjugate(theta, shifts.v);
  const Complex phase = unit_phase(theta);
  const auto expected = shifts.v.cast<Complex>().scaled(phase);

  GaugeReport report;
  for (Integer c : shifts.v.safe_cols) {
    double err = 0.0;
    for (const auto& [r, v] : rotated.matrix.column(c)) err = std::max(err, std::abs(v - expected.matrix.get(r, c)));
    for (const auto& [r, v] : expected.matrix.column(c)) err = std::max(err, std::abs(v - rotated.matrix.get(r, c)));
    if (c == 0) {
      report.zero_column_discrepancy = err;
      continue;
    }
    ++report.checked_columns;
    report.max_error = std::max(report.max_error, err);
    if (err > tol) report.mismatched_columns.push_back(c);
  }

  const auto mult = build_mult(f, w);
  const auto mult_rotated = gauge.conjugate(theta, mult);
  report.multiplication_invariant = max_abs_difference(mult_rotated.matrix, to_complex(mult.matrix)) <= tol;
  return report;
}

namespace {

bool columns_equal(const SparseMatrix<Rational>& a, const SparseMatrix<Rational>& b, Integer c) {
  return a.column(c) == b.column(c);
}

}  // namespace

StaceyReport verify_stacey(const RatCylinder& f, const Window& w) {
  const int s = f.base();
  const auto shifts = build_shift(s, w);
  const auto identity = identity_op(w);
  StaceyReport report;

  const auto isometry = shifts.v_star.compose(shifts.v);
  for (Integer c : isometry.safe_cols) {
    ++report.isometry_checked;
    if (!columns_equal(isometry.matrix, identity.matrix, c)) report.mismatches.push_back({"V*V = I", c});
  }

  const auto covariance = shifts.v.compose(build_mult(f, w)).compose(shifts.v_star);
  const auto expected = build_mult(alpha_endo(f), w);
  for (Integer c : covariance.safe_cols) {
    ++report.covariance_checked;
    if (!columns_equal(covariance.matrix, expected.matrix, c)) {
      report.mismatches.push_back({"V M_f V* = M_{alpha f}", c});
    }
  }
  return report;
}

StaceyReport verify_stacey(const IntCylinder& f, const Window& w) { return verify_stacey(f.cast<Rational>(), w); }

void require_k0_indicator(const IntCylinder& x) {
  for (Integer v : x.values()) {
    if (v != 0 && v != 1) throw DomainError("K0 generator needs a 0/1-valued function");
  }
  if (!x.vanishes_off_units()) throw DomainError("K0 generator set must lie in the units");
  if (x(1) != 0) throw DomainError("K0 generator set must not contain 1");
}

RatOp k0_projection(const IntCylinder& x, const Window& w) {
  require_k0_indicator(x);
  const auto m = build_m_lambda(x.as_units(), w);
  const auto mu = build_mu_chi(chi_delta(0), x.base(), w);
  return m.compose(mu);
}

}  // namespace hensel
