#pragma once

#include <map>
#include <vector>

#include "hensel/cylinder.hpp"

namespace hensel {

/// Membership in T = { x in Z : x >= 2, s does not divide x }.
bool in_T(Integer x, int s);

/// A checked element of T.
class TIndex {
 public:
  TIndex(Integer y, int s);

  Integer value() const { return y_; }
  friend auto operator<=>(const TIndex&, const TIndex&) = default;

 private:
  Integer y_;
};

/// n(x) with s^{n-1} <= x < s^n, and gamma(x) = x mod s^{n-1}
/// (the leading base-s digit dropped).
struct LevelGamma {
  int n = 0;
  Integer gamma = 0;
};

/// DomainError for x < 2.
LevelGamma level_gamma(Integer x, int s);

inline int level_of(Integer x, int s) { return level_gamma(x, s).n; }
inline Integer gamma_of(Integer x, int s) { return level_gamma(x, s).gamma; }

/// z, gamma(z), gamma^2(z), ... for as long as the iterates stay in T.
/// Empty when z itself is not in T.
std::vector<Integer> gamma_orbit(Integer z, int s);

/// Sparse integer coefficients y -> phi_(y) on T, describing the
/// homomorphism sum phi_(y) e_(y) on C_1(Z_s^x, Z).
class HomT {
 public:
  explicit HomT(int s) : s_(s) {
    if (s < 2) throw ParameterError("base must be >= 2");
  }
  /// Validates every key against T and drops zero coefficients.
  HomT(int s, const std::map<Integer, Integer>& coeffs);

  int base() const { return s_; }
  const std::map<Integer, Integer>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  Integer coefficient(Integer y) const;
  /// Sum of |phi_(y)|: the number of copies per l-slice in the Fredholm module.
  Integer total_multiplicity() const;

  void add(Integer y, Integer phi);

  friend bool operator==(const HomT&, const HomT&) = default;

 private:
  int s_;
  std::map<Integer, Integer> coeffs_;
};

/// 1_(x) = 1_{(n(x), x)} as a units-domain function vanishing at 1.
IntCylinder generator(Integer x, int s);

/// Coefficients of f in the free basis {1_(x) : x in T}.
using Expansion = std::map<Integer, Integer>;

/// f_(x) = f(x) - f(gamma(x)) over T cap [2, s^level).
/// DomainError unless f vanishes off the units and at 1.
Expansion expand(const IntCylinder& f);

/// Expansion by repeatedly rewriting 1_{(n+1,x)} = 1_{(n,x)} - sum_{l=1}^{s-1} 1_{(x + l s^n)}
/// until every term is a basis element. Independent of `expand`.
Expansion expand_recursive(const IntCylinder& f);

/// sum f_(x) 1_(x) at the common level; the zero function for an empty map.
IntCylinder reconstruct(const Expansion& coeffs, int s);

enum class SpecialKind { delta, e };

/// delta_z(f) = f(z); e_(z)(f) = f(z) - f(gamma(z)).
Integer special_hom(SpecialKind kind, Integer z, const IntCylinder& f);

/// delta_z = e_(z) + e_(gamma z) + ... over the gamma orbit.
HomT delta_decompose(Integer z, int s);

/// Phi(f) = sum phi_(y) e_(y)(f).
Integer pair(const HomT& phi, const IntCylinder& f);

/// Throws DomainError unless f is an element of C_1(Z_s^x, Z).
void require_c1_function(const IntCylinder& f);

}  // namespace hensel
