#include "hensel/sadic.hpp"

#include <algorithm>
#include <string>

namespace hensel {

namespace {

void require_parameters(int base, int precision) {
  if (base < 2) throw ParameterError("base must be >= 2, got " + std::to_string(base));
  if (precision < 1) throw ParameterError("precision must be >= 1, got " + std::to_string(precision));
}

}  // namespace

SAdic SAdic::from_integer(Integer v, int base, int precision) {
  require_parameters(base, precision);
  std::vector<int> digits(static_cast<std::size_t>(precision), 0);
  // Digits of |v|, using unsigned magnitude so INT64_MIN is fine.
  auto magnitude = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
  for (auto& d : digits) {
    if (magnitude == 0) break;
    d = static_cast<int>(magnitude % static_cast<std::uint64_t>(base));
    magnitude /= static_cast<std::uint64_t>(base);
  }
  SAdic x(base, std::move(digits));
  return v < 0 ? -x : x;
}

SAdic SAdic::from_digits(std::vector<int> digits, int base) {
  require_parameters(base, static_cast<int>(digits.size()));
  for (int d : digits) {
    if (d < 0 || d >= base) throw ParameterError("digit " + std::to_string(d) + " outside [0, s-1]");
  }
  return SAdic(base, std::move(digits));
}

bool SAdic::is_zero() const {
  return std::all_of(digits_.begin(), digits_.end(), [](int d) { return d == 0; });
}

Integer SAdic::residue(int k) const {
  if (k < 0 || k > precision()) throw ParameterError("residue level exceeds precision");
  Integer r = 0;
  for (int j = k - 1; j >= 0; --j) r = r * base_ + digits_[static_cast<std::size_t>(j)];
  return r;
}

void SAdic::require_compatible(const SAdic& other) const {
  if (base_ != other.base_) throw ParameterError("s-adic base mismatch");
  if (digits_.size() != other.digits_.size()) throw ParameterError("s-adic precision mismatch");
}

SAdic SAdic::operator+(const SAdic& other) const {
  require_compatible(other);
  std::vector<int> out(digits_.size());
  int carry = 0;
  for (std::size_t j = 0; j < out.size(); ++j) {
    int t = digits_[j] + other.digits_[j] + carry;
    out[j] = t % base_;
    carry = t / base_;
  }
  return SAdic(base_, std::move(out));
}

SAdic SAdic::operator*(const SAdic& other) const {
  require_compatible(other);
  const std::size_t n = digits_.size();
  // Column sums fit easily in 64 bits for any practical precision.
  std::vector<Integer> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (digits_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) acc[i + j] += Integer{digits_[i]} * other.digits_[j];
  }
  std::vector<int> out(n);
  Integer carry = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Integer t = acc[j] + carry;
    out[j] = static_cast<int>(t % base_);
    carry = t / base_;
  }
  return SAdic(base_, std::move(out));
}

SAdic SAdic::operator-() const {
  // -x = (s^N - 1 - x) + 1
  std::vector<int> out(digits_.size());
  int carry = 1;
  for (std::size_t j = 0; j < out.size(); ++j) {
    int t = (base_ - 1 - digits_[j]) + carry;
    out[j] = t % base_;
    carry = t / base_;
  }
  return SAdic(base_, std::move(out));
}

Rational inverse_power(int s, int k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(k));
  return Rational(mpz_class(1), den);
}

Valuation valuation(Integer l, int s) {
  if (s < 2) throw ParameterError("base must be >= 2");
  if (l == 0) throw DomainError("valuation of 0 is undefined");
  Valuation v;
  while (l % s == 0) {
    l /= s;
    ++v.m;
  }
  v.unit_part = l;
  return v;
}

NormInfo norm_valuation(const SAdic& x) {
  NormInfo info;
  info.is_unit = x.is_unit();
  auto ds = x.digits();
  auto first = std::find_if(ds.begin(), ds.end(), [](int d) { return d != 0; });
  if (first == ds.end()) {
    info.value = 0;
    info.below_precision = true;
    return info;
  }
  info.value = inverse_power(x.base(), static_cast<int>(first - ds.begin()));
  return info;
}

NormInfo norm_valuation(Integer l, int s) {
  if (s < 2) throw ParameterError("base must be >= 2");
  NormInfo info;
  if (l == 0) {
    info.value = 0;
    return info;
  }
  info.valuation = valuation(l, s);
  info.value = inverse_power(s, info.valuation->m);
  info.is_unit = info.valuation->m == 0;
  return info;
}

NormInfo distance(const SAdic& a, const SAdic& b) { return norm_valuation(a - b); }

}  // namespace hensel
