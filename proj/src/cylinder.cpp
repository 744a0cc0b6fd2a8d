#include "hensel/cylinder.hpp"

namespace hensel {

IntCylinder indicator(int n, Integer x, int s) {
  if (s < 2) throw ParameterError("cylinder base must be >= 2");
  if (n < 0) throw ParameterError("cylinder level must be >= 0");
  const Integer mod = checked_pow(s, n);
  if (x < 0 || x >= mod) {
    throw ParameterError("indicator residue " + std::to_string(x) + " outside [0, s^n)");
  }
  std::vector<Integer> values(static_cast<std::size_t>(mod), 0);
  values[static_cast<std::size_t>(x)] = 1;
  return IntCylinder(s, n, Domain::full, std::move(values));
}

LipschitzData lipschitz(const ComplexCylinder&) {
  throw UnsupportedError("Lipschitz norms are computed exactly; complex scalars are not supported");
}

LipschitzData lipschitz(const AnyCylinder& f) {
  return std::visit([](const auto& g) { return lipschitz(g); }, f);
}

std::string to_string(Domain d) { return d == Domain::units ? "units" : "full"; }

}  // namespace hensel
