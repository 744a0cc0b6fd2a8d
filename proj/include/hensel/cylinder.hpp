#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hensel/sadic.hpp"
#include "hensel/scalar.hpp"

namespace hensel {

/// Whether a cylinder function is regarded as a function on Z_s or on the
/// unit sphere Z_s^x (extended by zero to the non-units).
enum class Domain { full, units };

/// A locally constant function on Z_s of level n: its value at z depends only
/// on z mod s^n. Stored as the table of s^n values indexed by residue.
///
/// Every Z-valued continuous function on Z_s is of this form, so the table is
/// an exact representation, not an approximation.
template <Scalar S>
class CylinderFunction {
 public:
  CylinderFunction(int base, int level, Domain domain, std::vector<S> values)
      : base_(base), level_(level), domain_(domain), values_(std::move(values)) {
    if (base_ < 2) throw ParameterError("cylinder base must be >= 2");
    if (level_ < 0) throw ParameterError("cylinder level must be >= 0");
    if (static_cast<Integer>(values_.size()) != checked_pow(base_, level_)) {
      throw ParameterError("cylinder value table must have s^level entries");
    }
    if (domain_ == Domain::units && !vanishes_off_units()) {
      throw DomainError("units-domain cylinder function is nonzero at a non-unit residue");
    }
  }

  static CylinderFunction constant(int base, S c) {
    return CylinderFunction(base, 0, Domain::full, {std::move(c)});
  }

  static CylinderFunction zero(int base, Domain domain = Domain::full) {
    return CylinderFunction(base, 0, domain, {ScalarTraits<S>::zero()});
  }

  /// c on every unit, 0 elsewhere (level 1).
  static CylinderFunction units_constant(int base, S c) {
    std::vector<S> v(static_cast<std::size_t>(base), c);
    v[0] = ScalarTraits<S>::zero();
    return CylinderFunction(base, 1, Domain::units, std::move(v));
  }

  int base() const { return base_; }
  int level() const { return level_; }
  Domain domain() const { return domain_; }
  std::span<const S> values() const { return values_; }
  Integer modulus() const { return static_cast<Integer>(values_.size()); }

  const S& at_residue(Integer r) const {
    if (r < 0 || r >= modulus()) throw ParameterError("residue out of range");
    return values_[static_cast<std::size_t>(r)];
  }

  /// f(z) for an integer z embedded in Z_s; negative z use the nonnegative residue.
  S operator()(Integer z) const { return values_[static_cast<std::size_t>(mod_floor(z, modulus()))]; }

  S operator()(const SAdic& z) const {
    if (z.base() != base_) throw ParameterError("s-adic base does not match cylinder base");
    if (z.precision() < level_) throw ParameterError("s-adic precision below cylinder level");
    return values_[static_cast<std::size_t>(z.residue(level_))];
  }

  /// f(s^k u) without forming s^k u.
  S eval_scaled(int k, Integer u) const {
    if (k >= level_) return values_[0];
    const Integer mod = modulus();
    auto r = static_cast<__int128>(checked_pow(base_, k)) * mod_floor(u, mod) % mod;
    return values_[static_cast<std::size_t>(r)];
  }

  bool vanishes_off_units() const {
    for (Integer r = 0; r < modulus(); r += base_) {
      if (values_[static_cast<std::size_t>(r)] != ScalarTraits<S>::zero()) return false;
    }
    return true;
  }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const S& v) { return v == ScalarTraits<S>::zero(); });
  }

  /// Same function written at a finer level.
  CylinderFunction refine(int new_level) const {
    if (new_level < level_) throw ParameterError("refine target level below current level");
    if (new_level == level_) return *this;
    const Integer mod = checked_pow(base_, new_level);
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(mod));
    for (Integer r = 0; r < mod; ++r) out.push_back(values_[static_cast<std::size_t>(r % modulus())]);
    return CylinderFunction(base_, new_level, domain_, std::move(out));
  }

  /// Product with the indicator of Z_s^x, tagged as a units function.
  CylinderFunction restrict_to_units() const {
    auto g = level_ == 0 ? refine(1) : *this;
    for (Integer r = 0; r < g.modulus(); r += base_) g.values_[static_cast<std::size_t>(r)] = ScalarTraits<S>::zero();
    g.domain_ = Domain::units;
    return g;
  }

  /// Retag as a units function; DomainError if it does not vanish off the units.
  CylinderFunction as_units() const {
    if (!vanishes_off_units()) throw DomainError("function does not vanish off the units");
    auto g = *this;
    g.domain_ = Domain::units;
    return g;
  }

  CylinderFunction operator+(const CylinderFunction& other) const {
    return combine(other, [](const S& a, const S& b) { return S(a + b); },
                   domain_ == Domain::units && other.domain_ == Domain::units);
  }

  CylinderFunction operator-(const CylinderFunction& other) const {
    return combine(other, [](const S& a, const S& b) { return S(a - b); },
                   domain_ == Domain::units && other.domain_ == Domain::units);
  }

  CylinderFunction operator*(const CylinderFunction& other) const {
    return combine(other, [](const S& a, const S& b) { return S(a * b); },
                   domain_ == Domain::units || other.domain_ == Domain::units);
  }

  CylinderFunction scaled(const S& c) const {
    auto g = *this;
    for (auto& v : g.values_) v = S(v * c);
    return g;
  }

  template <Scalar T>
  CylinderFunction<T> cast() const {
    std::vector<T> out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
      if constexpr (std::is_same_v<T, Rational>) {
        out.push_back(to_rational(v));
      } else if constexpr (std::is_same_v<T, Complex>) {
        out.push_back(to_complex(v));
      } else {
        static_assert(std::is_same_v<T, S>, "unsupported scalar cast");
        out.push_back(v);
      }
    }
    return CylinderFunction<T>(base_, level_, domain_, std::move(out));
  }

  /// Equality as functions on Z_s: compared at the common refinement.
  /// The domain tag is not part of the function's identity.
  friend bool operator==(const CylinderFunction& a, const CylinderFunction& b) {
    if (a.base_ != b.base_) return false;
    const int n = std::max(a.level_, b.level_);
    const Integer mod = checked_pow(a.base_, n);
    for (Integer r = 0; r < mod; ++r) {
      if (a(r) != b(r)) return false;
    }
    return true;
  }

 private:
  template <class Op>
  CylinderFunction combine(const CylinderFunction& other, Op op, bool units) const {
    if (base_ != other.base_) throw ParameterError("cylinder base mismatch");
    const int n = std::max(level_, other.level_);
    const Integer mod = checked_pow(base_, n);
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(mod));
    for (Integer r = 0; r < mod; ++r) out.push_back(op((*this)(r), other(r)));
    CylinderFunction g(base_, n, Domain::full, std::move(out));
    if (units) g.domain_ = Domain::units;
    return g;
  }

  int base_;
  int level_;
  Domain domain_;
  std::vector<S> values_;
};

using IntCylinder = CylinderFunction<Integer>;
using RatCylinder = CylinderFunction<Rational>;
using ComplexCylinder = CylinderFunction<Complex>;

/// Any of the three scalar flavours, as read from JSON.
using AnyCylinder = std::variant<IntCylinder, RatCylinder, ComplexCylinder>;

/// 1_{(n,x)}: the indicator of {z : s^n | z - x}, level n, full domain.
IntCylinder indicator(int n, Integer x, int s);

/// (alpha f)(z) = f(z/s) if s | z, else 0. Raises the level by one.
template <Scalar S>
CylinderFunction<S> alpha_endo(const CylinderFunction<S>& f) {
  const int s = f.base();
  const Integer mod = checked_pow(s, f.level() + 1);
  std::vector<S> out(static_cast<std::size_t>(mod), ScalarTraits<S>::zero());
  for (Integer r = 0; r < mod; r += s) out[static_cast<std::size_t>(r)] = f(r / s);
  return CylinderFunction<S>(s, f.level() + 1, Domain::full, std::move(out));
}

/// Lipschitz data of a function on Z_s^x with respect to |.|_s.
struct LipschitzData {
  Rational constant;  ///< L(f)
  Rational norm;      ///< sup|f| + L(f)
  Rational sup;
};

/// L(f) = max over 0 <= k < n of s^k * max |f(a) - f(b)|, where a, b run over
/// unit residues mod s^n that agree mod s^k but not mod s^{k+1}.
///
/// Per k the inner maximum is taken from per-class extrema, so the cost is
/// O(n s^n) instead of the O(s^2n) pair scan.
template <ExactScalar S>
LipschitzData lipschitz(const CylinderFunction<S>& f) {
  if (!f.vanishes_off_units()) throw DomainError("Lipschitz data requires a units-supported function");
  const int s = f.base();
  const Integer mod = f.modulus();
  LipschitzData out{Rational(0), Rational(0), Rational(0)};
  for (Integer r = 1; r < mod; ++r) {
    if (r % s != 0) out.sup = std::max(out.sup, abs_value(f.at_residue(r)));
  }
  if (f.level() == 0) {
    out.norm = out.sup;
    return out;
  }
  for (int k = 0; k < f.level(); ++k) {
    const Integer group_mod = checked_pow(s, k);
    const Integer class_mod = group_mod * s;
    std::vector<Rational> hi(static_cast<std::size_t>(class_mod));
    std::vector<Rational> lo(static_cast<std::size_t>(class_mod));
    std::vector<char> seen(static_cast<std::size_t>(class_mod), 0);
    for (Integer r = 0; r < mod; ++r) {
      if (r % s == 0) continue;
      const auto c = static_cast<std::size_t>(r % class_mod);
      Rational v = to_rational(f.at_residue(r));
      if (!seen[c]) {
        hi[c] = v;
        lo[c] = v;
        seen[c] = 1;
      } else {
        if (v > hi[c]) hi[c] = v;
        if (v < lo[c]) lo[c] = v;
      }
    }
    Rational best = 0;
    for (Integer g = 0; g < group_mod; ++g) {
      for (int t = 0; t < s; ++t) {
        const auto ct = static_cast<std::size_t>(g + t * group_mod);
        if (!seen[ct]) continue;
        for (int u = 0; u < s; ++u) {
          const auto cu = static_cast<std::size_t>(g + u * group_mod);
          if (u == t || !seen[cu]) continue;
          Rational d = hi[ct] - lo[cu];
          if (d > best) best = d;
        }
      }
    }
    Rational scaled = best * Rational(static_cast<long>(group_mod));
    if (scaled > out.constant) out.constant = scaled;
  }
  out.norm = out.sup + out.constant;
  return out;
}

/// Lipschitz norms are exact-only.
LipschitzData lipschitz(const ComplexCylinder& f);
LipschitzData lipschitz(const AnyCylinder& f);

std::string to_string(Domain d);

}  // namespace hensel
