#include "hensel/fredholm.hpp"

#include <cstdlib>

#include "hensel/operators.hpp"

namespace hensel {

std::string to_string(const GradedBasisIndex& label) {
  std::string out = label.parity == Parity::ev ? "ev" : "odd";
  out += label.sign == Sign::plus ? ",+" : ",-";
  out += ",(" + std::to_string(label.y) + "," + std::to_string(label.j) + "," + std::to_string(label.l) + ")";
  return out;
}

ModuleTruncation::ModuleTruncation(HomT phi, Integer l_max) : phi_(std::move(phi)), l_max_(l_max) {
  if (l_max < 0) throw ParameterError("L_max must be >= 0");
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (const auto& [y, c] : phi_.coeffs()) {
      if ((sign == Sign::plus) != (c > 0)) continue;
      for (Integer j = 1; j <= std::abs(c); ++j) {
        for (Integer l = 0; l <= l_max_; ++l) {
          index_[{static_cast<int>(sign), y, j, l}] = static_cast<Integer>(labels_.size());
          labels_.push_back({sign, y, j, l});
        }
      }
    }
  }
}

std::vector<GradedBasisIndex> ModuleTruncation::basis(Parity parity) const {
  std::vector<GradedBasisIndex> out;
  out.reserve(labels_.size());
  for (const auto& s : labels_) out.push_back({parity, s.sign, s.y, s.j, s.l});
  return out;
}

GradedBasisIndex ModuleTruncation::label(Parity parity, Integer position) const {
  const auto& s = labels_.at(static_cast<std::size_t>(position));
  return {parity, s.sign, s.y, s.j, s.l};
}

Integer ModuleTruncation::position(Sign sign, Integer y, Integer j, Integer l) const {
  auto it = index_.find({static_cast<int>(sign), y, j, l});
  return it == index_.end() ? -1 : it->second;
}

Integer ModuleTruncation::evaluation_point(Parity parity, Sign sign, Integer y) const {
  const bool use_gamma = (parity == Parity::ev) == (sign == Sign::plus);
  return use_gamma ? gamma_of(y, base()) : y;
}

std::vector<Integer> ModuleTruncation::positions() const {
  std::vector<Integer> out(labels_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Integer>(i);
  return out;
}

IdealGenerator ideal_generator(Integer x, Integer p, int s) {
  if (p < 0) throw ParameterError("chi_p needs p >= 0");
  return IdealGenerator{generator(x, s).cast<Rational>(), p};
}

namespace {

std::set<Integer> all_positions(const ModuleTruncation& mt) {
  auto ps = mt.positions();
  return {ps.begin(), ps.end()};
}

template <class Value>
ModuleOp diagonal(const ModuleTruncation& mt, Parity parity, Value value) {
  ModuleOp out{{}, all_positions(mt)};
  for (Integer pos = 0; pos < mt.dimension(); ++pos) {
    const auto lab = mt.label(parity, pos);
    out.matrix.set(pos, pos, value(mt.evaluation_point(parity, lab.sign, lab.y), lab.l));
  }
  return out;
}

}  // namespace

ModuleOp represent_shift_power(Integer n, const ModuleTruncation& mt, Parity parity) {
  ModuleOp out;
  for (Integer pos = 0; pos < mt.dimension(); ++pos) {
    const auto lab = mt.label(parity, pos);
    const Integer target_l = lab.l + n;
    if (target_l < 0) {
      out.safe_cols.insert(pos);  // (V*)^k kills the first k slices exactly
      continue;
    }
    const Integer target = mt.position(lab.sign, lab.y, lab.j, target_l);
    if (target < 0) continue;  // lands beyond L_max
    out.matrix.set(target, pos, 1);
    out.safe_cols.insert(pos);
  }
  return out;
}

ModuleOp represent(const Generator& gen, const ModuleTruncation& mt, Parity parity) {
  const int s = mt.base();
  return std::visit(
      [&](const auto& g) -> ModuleOp {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, ShiftGenerator>) {
          return represent_shift_power(1, mt, parity);
        } else if constexpr (std::is_same_v<G, MultGenerator>) {
          if (g.f.base() != s) throw ParameterError("function base differs from module base");
          return diagonal(mt, parity, [&](Integer u, Integer l) { return g.f.eval_scaled(static_cast<int>(l), u); });
        } else {
          if (g.lambda.base() != s) throw ParameterError("function base differs from module base");
          if (g.lambda.domain() != Domain::units) throw ParameterError("m_lambda needs a units-domain function");
          // m_lambda mu_{chi_p} on s^l u with u a unit or 0.
          return diagonal(mt, parity, [&](Integer u, Integer l) {
            return (u == 0 || l != g.p) ? Rational(0) : g.lambda(u);
          });
        }
      },
      gen);
}

FredholmOperators build_F_Gamma(const ModuleTruncation& mt) {
  const Integer d = mt.dimension();
  FredholmOperators out;
  out.g = SparseMatrix<Rational>::identity(mt.positions());
  for (Integer pos = 0; pos < d; ++pos) {
    out.f.set(pos, d + pos, 1);  // G
    out.f.set(d + pos, pos, 1);  // G*
    out.gamma.set(pos, pos, 1);
    out.gamma.set(d + pos, d + pos, -1);
  }
  return out;
}

SparseMatrix<Rational> represent_full(const Generator& gen, const ModuleTruncation& mt) {
  const Integer d = mt.dimension();
  SparseMatrix<Rational> out = represent(gen, mt, Parity::ev).matrix;
  const auto odd = represent(gen, mt, Parity::odd);
  for (const auto& [c, col] : odd.matrix.columns())
    for (const auto& [r, v] : col) out.set(d + r, d + c, v);
  return out;
}

ModuleOp commutator_F(const Generator& gen, const ModuleTruncation& mt) {
  const auto ops = build_F_Gamma(mt);
  const auto odd = represent(gen, mt, Parity::odd);
  const auto ev = represent(gen, mt, Parity::ev);
  ModuleOp out{ops.g * odd.matrix - ev.matrix * ops.g, {}};
  for (Integer c : odd.safe_cols)
    if (ev.safe_cols.contains(c)) out.safe_cols.insert(c);
  return out;
}

AxiomReport check_module_axioms(const ModuleTruncation& mt, const std::vector<Generator>& gens) {
  const auto ops = build_F_Gamma(mt);
  const Integer d = mt.dimension();
  std::vector<Integer> full(static_cast<std::size_t>(2 * d));
  for (Integer i = 0; i < 2 * d; ++i) full[static_cast<std::size_t>(i)] = i;
  const auto id_full = SparseMatrix<Rational>::identity(full);
  const auto id_half = SparseMatrix<Rational>::identity(mt.positions());

  AxiomReport r;
  r.f_squared_identity = ops.f * ops.f == id_full;
  r.f_self_adjoint = ops.f.adjoint() == ops.f;
  r.gamma_anticommutes = (ops.gamma * ops.f + ops.f * ops.gamma).empty();
  r.gamma_involution = ops.gamma * ops.gamma == id_full && ops.gamma.adjoint() == ops.gamma;
  r.g_unitary = ops.g.adjoint() * ops.g == id_half && ops.g * ops.g.adjoint() == id_half;
  r.gamma_commutes_with_rep = true;
  for (const auto& gen : gens) {
    const auto rho = represent_full(gen, mt);
    if (!(ops.gamma * rho - rho * ops.gamma).empty()) r.gamma_commutes_with_rep = false;
  }
  return r;
}

IndexReport compressed_index(const ModuleTruncation& mt, const SparseMatrix<Rational>& odd_to_ev,
                             const SparseMatrix<Rational>& p_ev, const SparseMatrix<Rational>& p_odd) {
  auto range_of = [](const SparseMatrix<Rational>& p) {
    std::set<Integer> out;
    for (const auto& [c, col] : p.columns()) {
      if (col.size() != 1 || col.begin()->first != c || col.begin()->second != 1) {
        throw DomainError("projection is not a diagonal 0/1 matrix");
      }
      out.insert(c);
    }
    return out;
  };
  const auto ran_odd = range_of(p_odd);
  const auto ran_ev = range_of(p_ev);
  const auto b = (p_ev * odd_to_ev * p_odd).restrict_columns(ran_odd).restrict_rows(ran_ev);
  const Integer rk = rank(b);

  IndexReport out;
  out.domain_dim = static_cast<Integer>(ran_odd.size());
  out.codomain_dim = static_cast<Integer>(ran_ev.size());
  out.kernel_dim = out.domain_dim - rk;
  out.cokernel_dim = out.codomain_dim - rk;
  out.index = out.kernel_dim - out.cokernel_dim;

  // For monomial B the zero columns / zero rows span the kernel / cokernel.
  if (b.is_monomial()) {
    std::set<Integer> hit_rows;
    for (const auto& [c, col] : b.columns()) hit_rows.insert(col.begin()->first);
    for (Integer c : ran_odd)
      if (b.column(c).empty()) out.kernel_witnesses.push_back(mt.label(Parity::odd, c));
    for (Integer r : ran_ev)
      if (!hit_rows.contains(r)) out.cokernel_witnesses.push_back(mt.label(Parity::ev, r));
  }
  return out;
}

IndexReport index_pairing(const HomT& phi, const IntCylinder& x, Integer l_max) {
  if (phi.base() != x.base()) throw ParameterError("homomorphism and set have different bases");
  require_k0_indicator(x);
  ModuleTruncation mt(phi, l_max);
  const Generator p = IdealGenerator{x.as_units().cast<Rational>(), 0};
  const auto ops = build_F_Gamma(mt);
  return compressed_index(mt, ops.g, represent(p, mt, Parity::ev).matrix, represent(p, mt, Parity::odd).matrix);
}

Integer pairing_identity(const HomT& phi, Integer l_max) {
  ModuleTruncation mt(phi, l_max);
  const auto id = SparseMatrix<Rational>::identity(mt.positions());
  return compressed_index(mt, build_F_Gamma(mt).g, id, id).index;
}

Integer eta_pairing(const K0Class& cls) {
  // rho_odd on C: V -> 1, M_f -> f(0). H_ev = 0 and G = 0, so the index of
  // the compression is dim Ran rho_odd(P).
  const Rational v = 1;
  const Rational rho_p = std::visit(
      [&](const auto& c) -> Rational {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, IdentityClass>) {
          return 1;
        } else if constexpr (std::is_same_v<C, RangeComplementClass>) {
          return 1 - v * v;
        } else {
          require_k0_indicator(c.x);
          // m_{1_X} mu_{chi_0} = M_f with f = 1_X extended by zero, so rho = f(0).
          return to_rational(c.x(0));
        }
      },
      cls);
  return rho_p == 0 ? 0 : 1;
}

}  // namespace hensel
