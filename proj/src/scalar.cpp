#include "hensel/scalar.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace hensel {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

bool is_integer_literal(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Rational parse_decimal(std::string_view t) {
  // "[-]digits.digits" only; exponents are rejected to keep parsing exact.
  bool negative = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  auto dot = t.find('.');
  std::string digits(t.substr(0, dot));
  std::string frac(t.substr(dot + 1));
  if ((digits.empty() && frac.empty()) || !is_integer_literal(digits.empty() ? "0" : digits) ||
      (!frac.empty() && !is_integer_literal(frac))) {
    throw ParameterError("malformed rational literal '" + std::string(t) + "'");
  }
  mpz_class num(digits.empty() ? "0" : digits, 10);
  mpz_class den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational make_rational(Integer p, Integer q) {
  if (q == 0) throw ParameterError("zero denominator");
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto t = trim(text);
  if (t.empty()) throw ParameterError("empty rational literal");
  auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    if (t.find('.') != std::string_view::npos) return parse_decimal(t);
    if (!is_integer_literal(t)) throw ParameterError("malformed rational literal '" + std::string(t) + "'");
    std::string s(t.front() == '+' ? t.substr(1) : t);
    return Rational(mpz_class(s, 10));
  }
  auto num = t.substr(0, slash);
  auto den = t.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParameterError("malformed rational literal '" + std::string(t) + "'");
  }
  std::string ns(num.front() == '+' ? num.substr(1) : num);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParameterError("zero denominator in '" + std::string(t) + "'");
  Rational q(mpz_class(ns, 10), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

Complex parse_complex(std::string_view text) {
  auto t = trim(text);
  auto comma = t.find(',');
  auto parse_double = [&](std::string_view part) {
    part = trim(part);
    std::string buf(part);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size()) {
      throw ParameterError("malformed complex literal '" + std::string(t) + "'");
    }
    return v;
  };
  if (comma == std::string_view::npos) return {parse_double(t), 0.0};
  return {parse_double(t.substr(0, comma)), parse_double(t.substr(comma + 1))};
}

std::string format_complex(const Complex& z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
  return buf;
}

Integer parse_integer(std::string_view text) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  Integer v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ParameterError("malformed integer literal '" + std::string(text) + "'");
  }
  return v;
}

std::string format_scalar(Integer v) { return std::to_string(v); }
std::string format_scalar(const Rational& v) { return format_rational(v); }
std::string format_scalar(const Complex& v) { return format_complex(v); }

Integer checked_pow(Integer s, int k) {
  if (k < 0) throw ParameterError("negative exponent");
  Integer r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > std::numeric_limits<Integer>::max() / s) {
      throw ParameterError("s^k overflows 64-bit integers");
    }
    r *= s;
  }
  return r;
}

}  // namespace hensel
