#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hensel/scalar.hpp"

namespace hensel {

/// l = s^m * unit_part with s not dividing unit_part.
struct Valuation {
  int m = 0;
  Integer unit_part = 1;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// An element of Z_s known modulo s^N: N base-s digits, least significant first.
///
/// Values are immutable. Binary operations require equal base and precision;
/// mixing precisions is a ParameterError rather than a silent truncation.
class SAdic {
 public:
  /// v mod s^N. Negative v is embedded by base complement, so the map
  /// Z -> Z/s^N is a ring homomorphism.
  static SAdic from_integer(Integer v, int base, int precision);
  static SAdic from_digits(std::vector<int> digits, int base);

  int base() const { return base_; }
  int precision() const { return static_cast<int>(digits_.size()); }
  std::span<const int> digits() const { return digits_; }
  int digit(int j) const { return digits_.at(static_cast<std::size_t>(j)); }

  bool is_zero() const;
  bool is_unit() const { return digits_.front() != 0; }
  /// Residue modulo s^k for k <= precision.
  Integer residue(int k) const;

  SAdic operator+(const SAdic& other) const;
  SAdic operator*(const SAdic& other) const;
  SAdic operator-() const;
  SAdic operator-(const SAdic& other) const { return *this + (-other); }

  friend bool operator==(const SAdic&, const SAdic&) = default;

 private:
  SAdic(int base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {}
  void require_compatible(const SAdic& other) const;

  int base_;
  std::vector<int> digits_;
};

/// |x|_s with the finite-precision caveat made explicit.
///
/// `below_precision` is set when every known digit is zero: the true norm is
/// then only known to be <= s^-N and `value` is reported as 0.
struct NormInfo {
  Rational value;
  bool below_precision = false;
  std::optional<Valuation> valuation;
  bool is_unit = false;
};

/// Throws DomainError for l == 0.
Valuation valuation(Integer l, int s);

NormInfo norm_valuation(const SAdic& x);
/// Exact for integers; 0 has norm 0 with no valuation and no precision flag.
NormInfo norm_valuation(Integer l, int s);

/// |a - b|_s at the common precision; same flag semantics as norm_valuation.
NormInfo distance(const SAdic& a, const SAdic& b);

/// s^-k as an exact rational.
Rational inverse_power(int s, int k);

}  // namespace hensel
