#include "hensel/khomology.hpp"

#include <cstdlib>
#include <string>

namespace hensel {

bool in_T(Integer x, int s) { return x >= 2 && x % s != 0; }

TIndex::TIndex(Integer y, int s) : y_(y) {
  if (s < 2) throw ParameterError("base must be >= 2");
  if (!in_T(y, s)) throw DomainError(std::to_string(y) + " is not in T for s=" + std::to_string(s));
}

LevelGamma level_gamma(Integer x, int s) {
  if (s < 2) throw ParameterError("base must be >= 2");
  if (x < 2) throw DomainError("n(x) and gamma(x) need x >= 2, got " + std::to_string(x));
  LevelGamma out;
  Integer lower = 1;  // s^{n-1}
  out.n = 1;
  while (x / s >= lower) {
    lower *= s;
    ++out.n;
  }
  out.gamma = x % lower;
  return out;
}

std::vector<Integer> gamma_orbit(Integer z, int s) {
  std::vector<Integer> orbit;
  while (in_T(z, s)) {
    orbit.push_back(z);
    z = gamma_of(z, s);
  }
  return orbit;
}

HomT::HomT(int s, const std::map<Integer, Integer>& coeffs) : HomT(s) {
  for (const auto& [y, phi] : coeffs) add(y, phi);
}

Integer HomT::coefficient(Integer y) const {
  auto it = coeffs_.find(y);
  return it == coeffs_.end() ? 0 : it->second;
}

Integer HomT::total_multiplicity() const {
  Integer total = 0;
  for (const auto& [y, phi] : coeffs_) total += std::abs(phi);
  return total;
}

void HomT::add(Integer y, Integer phi) {
  TIndex checked(y, s_);
  Integer& slot = coeffs_[checked.value()];
  slot += phi;
  if (slot == 0) coeffs_.erase(checked.value());
}

IntCylinder generator(Integer x, int s) {
  TIndex checked(x, s);
  return indicator(level_of(checked.value(), s), x, s).as_units();
}

void require_c1_function(const IntCylinder& f) {
  if (!f.vanishes_off_units()) throw DomainError("function is not supported on the units");
  if (f(1) != 0) throw DomainError("function does not vanish at 1");
}

Expansion expand(const IntCylinder& f) {
  require_c1_function(f);
  const int s = f.base();
  Expansion out;
  const Integer bound = f.modulus();
  for (Integer x = 2; x < bound; ++x) {
    if (!in_T(x, s)) continue;
    if (Integer c = special_hom(SpecialKind::e, x, f); c != 0) out[x] = c;
  }
  return out;
}

namespace {

// Adds c * 1_{(n,x)} to `out`, with 2 <= x < s^n and s not dividing x.
void rewrite_cylinder(int n, Integer x, Integer c, int s, Expansion& out) {
  const int nx = level_of(x, s);
  if (n == nx) {
    out[x] += c;
    return;
  }
  // 1_{(n,x)} = 1_{(n-1,x)} - sum_{l=1}^{s-1} 1_{(x + l s^{n-1})}
  const Integer step = checked_pow(s, n - 1);
  rewrite_cylinder(n - 1, x, c, s, out);
  for (int l = 1; l < s; ++l) out[x + l * step] -= c;
}

}  // namespace

Expansion expand_recursive(const IntCylinder& f) {
  require_c1_function(f);
  const int s = f.base();
  Expansion out;
  // f = sum over residues r of f(r) 1_{(level, r)}; the units with r >= 2
  // are exactly the nonzero terms since f(1) = 0.
  for (Integer r = 2; r < f.modulus(); ++r) {
    if (Integer c = f.at_residue(r); c != 0) rewrite_cylinder(f.level(), r, c, s, out);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntCylinder reconstruct(const Expansion& coeffs, int s) {
  int level = 0;
  for (const auto& [x, c] : coeffs) level = std::max(level, level_of(TIndex(x, s).value(), s));
  const Integer mod = checked_pow(s, level);
  std::vector<Integer> values(static_cast<std::size_t>(mod), 0);
  for (const auto& [x, c] : coeffs) {
    const Integer step = checked_pow(s, level_of(x, s));
    for (Integer r = x; r < mod; r += step) values[static_cast<std::size_t>(r)] += c;
  }
  return IntCylinder(s, level, Domain::units, std::move(values));
}

Integer special_hom(SpecialKind kind, Integer z, const IntCylinder& f) {
  if (kind == SpecialKind::delta) {
    if (z < 0) throw DomainError("delta_z needs z >= 0");
    return f(z);
  }
  return f(z) - f(gamma_of(z, f.base()));
}

HomT delta_decompose(Integer z, int s) {
  if (z < 2) throw DomainError("delta decomposition needs z >= 2");
  HomT out(s);
  for (Integer y : gamma_orbit(z, s)) out.add(y, 1);
  return out;
}

Integer pair(const HomT& phi, const IntCylinder& f) {
  if (phi.base() != f.base()) throw ParameterError("homomorphism and function have different bases");
  require_c1_function(f);
  Integer total = 0;
  for (const auto& [y, c] : phi.coeffs()) total += c * special_hom(SpecialKind::e, y, f);
  return total;
}

}  // namespace hensel
