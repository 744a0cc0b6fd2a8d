#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hensel {

using Integer = std::int64_t;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Bad arguments: base < 2, precision mismatch, out-of-range residues.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arguments outside the mathematical domain of an operation
/// (valuation of 0, functions not vanishing at 1, labels not in T).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation not available for the given scalar ring.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class ScalarRing { integer, rational, complex };

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Integer> {
  static constexpr ScalarRing ring = ScalarRing::integer;
  static constexpr bool exact = true;
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarRing ring = ScalarRing::rational;
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr ScalarRing ring = ScalarRing::complex;
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
};

template <class S>
concept ExactScalar = ScalarTraits<S>::exact;

template <class S>
concept Scalar = requires { ScalarTraits<S>::ring; };

inline Rational to_rational(Integer v) { return Rational(static_cast<long>(v)); }
inline Rational to_rational(const Rational& v) { return v; }

/// p/q in lowest terms; ParameterError if q == 0.
Rational make_rational(Integer p, Integer q);

inline Complex to_complex(Integer v) { return {static_cast<double>(v), 0.0}; }
inline Complex to_complex(const Rational& v) { return {v.get_d(), 0.0}; }
inline Complex to_complex(const Complex& v) { return v; }

inline Rational abs_value(Integer v) { return abs(to_rational(v)); }
inline Rational abs_value(const Rational& v) { return abs(v); }

/// Parses "p", "p/q" or a decimal literal; the result is canonicalized.
Rational parse_rational(std::string_view text);
/// Canonical text: "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& q);

/// Complex scalars travel as "re,im" with round-trip precision.
Complex parse_complex(std::string_view text);
std::string format_complex(const Complex& z);

Integer parse_integer(std::string_view text);

std::string format_scalar(Integer v);
std::string format_scalar(const Rational& v);
std::string format_scalar(const Complex& v);

template <class S>
S parse_scalar(std::string_view text);

template <>
inline Integer parse_scalar<Integer>(std::string_view text) { return parse_integer(text); }
template <>
inline Rational parse_scalar<Rational>(std::string_view text) { return parse_rational(text); }
template <>
inline Complex parse_scalar<Complex>(std::string_view text) { return parse_complex(text); }

/// s^k as an exact integer; throws ParameterError on int64 overflow.
Integer checked_pow(Integer s, int k);

/// Nonnegative residue of v modulo m (m > 0).
inline Integer mod_floor(Integer v, Integer m) {
  Integer r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace hensel
