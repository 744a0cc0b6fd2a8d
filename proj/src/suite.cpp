#include "hensel/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hensel/oracle.hpp"

namespace hensel {

Integer CaseRng::uniform(Integer lo, Integer hi) {
  if (hi < lo) throw ParameterError("empty uniform range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Integer>(engine_() % span);
}

int level_cap(int s, Integer cap) {
  int level = 1;
  Integer v = s;
  while (v <= cap / s) {
    v *= s;
    ++level;
  }
  return level;
}

namespace {

Integer draw_value(CaseRng& rng) { return rng.uniform(-3, 3); }

Rational draw_rational(CaseRng& rng) {
  const Integer p = rng.uniform(-5, 5);
  const Integer q = rng.uniform(1, 4);
  return make_rational(p, q);
}

Integer draw_T(CaseRng& rng, int s, Integer bound) {
  for (;;) {
    const Integer y = rng.uniform(2, bound);
    if (in_T(y, s)) return y;
  }
}

std::string str(Integer v) { return std::to_string(v); }
std::string str(const Rational& q) { return format_rational(q); }

std::string describe(const Expansion& e) {
  std::string out = "{";
  for (const auto& [x, c] : e) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(x) + ":" + std::to_string(c);
  }
  return out + "}";
}

json hom_inputs(const HomT& phi) { return to_json(phi); }

json family_json(const CylinderFamily& family) {
  json out = json::array();
  for (const auto& [l, f] : family) out.push_back({{"l", l}, {"f", to_json(f)}});
  return out;
}

json poly_json(const PolyElement& a) {
  json ideal = json::array();
  for (const auto& [n, family] : a.ideal_terms) ideal.push_back({{"n", n}, {"family", family_json(family)}});
  return json{{"toeplitz", to_json(a.toeplitz)}, {"ideal_terms", ideal}};
}

/// Every unit residue value and every stored value of alpha(f) agree with the definition.
bool alpha_matches(const IntCylinder& f) {
  const auto g = alpha_endo(f);
  const int s = f.base();
  for (Integer r = 0; r < g.modulus(); ++r) {
    const Integer expected = r % s == 0 ? f(r / s) : 0;
    if (g(r) != expected) return false;
  }
  return true;
}

SparseMatrix<Rational> dense_identity(const Window& w) { return SparseMatrix<Rational>::identity(w.labels()); }

}  // namespace

IntCylinder random_c1_function(CaseRng& rng, int s, int level) {
  const Integer mod = checked_pow(s, level);
  std::vector<Integer> values(static_cast<std::size_t>(mod), 0);
  for (Integer r = 0; r < mod; ++r) {
    if (r % s != 0 && r != 1) values[static_cast<std::size_t>(r)] = draw_value(rng);
  }
  return IntCylinder(s, level, Domain::units, std::move(values));
}

IntCylinder random_full_function(CaseRng& rng, int s, int level) {
  const Integer mod = checked_pow(s, level);
  std::vector<Integer> values(static_cast<std::size_t>(mod));
  for (auto& v : values) v = draw_value(rng);
  return IntCylinder(s, level, Domain::full, std::move(values));
}

RatCylinder random_units_rational(CaseRng& rng, int s, int level) {
  const Integer mod = checked_pow(s, level);
  std::vector<Rational> values(static_cast<std::size_t>(mod), Rational(0));
  for (Integer r = 0; r < mod; ++r) {
    if (r % s != 0) values[static_cast<std::size_t>(r)] = draw_rational(rng);
  }
  return RatCylinder(s, level, Domain::units, std::move(values));
}

HomT random_hom(CaseRng& rng, int s, Integer bound, int terms) {
  HomT phi(s);
  while (static_cast<int>(phi.coeffs().size()) < terms) {
    const Integer y = draw_T(rng, s, bound);
    if (phi.coeffs().contains(y)) continue;
    Integer c = 0;
    while (c == 0) c = rng.uniform(-3, 3);
    phi.add(y, c);
  }
  return phi;
}

ToeplitzSymbol<Rational> random_symbol(CaseRng& rng) {
  ToeplitzSymbol<Rational> phi;
  const Integer terms = rng.uniform(1, 4);
  for (Integer k = 0; k < terms; ++k) {
    const Integer m = rng.uniform(-3, 3);
    phi[m] = draw_rational(rng);
  }
  std::erase_if(phi, [](const auto& kv) { return kv.second == 0; });
  return phi;
}

CylinderFamily random_family(CaseRng& rng, int s) {
  CylinderFamily family;
  const int top = std::min(level_cap(s, 256), 4);
  const Integer terms = rng.uniform(1, 3);
  for (Integer k = 0; k < terms; ++k) {
    const Integer l = rng.uniform(0, 3);
    family.insert_or_assign(l, random_units_rational(rng, s, static_cast<int>(rng.uniform(1, top))));
  }
  return family;
}

PolyElement random_poly_element(CaseRng& rng, int s) {
  PolyElement a;
  a.toeplitz = random_symbol(rng);
  const Integer terms = rng.uniform(0, 2);
  for (Integer k = 0; k < terms; ++k) a.ideal_terms[rng.uniform(-2, 2)] = random_family(rng, s);
  return a;
}

void Report::fail(std::string case_id, json inputs, std::string expected, std::string actual, std::string witness) {
  failures.push_back({std::move(case_id), std::move(inputs), std::move(expected), std::move(actual), std::move(witness)});
}

void Report::expect(bool ok, const std::string& case_id, const json& inputs, const std::string& expected,
                    const std::string& actual, const std::string& witness) {
  if (!ok) fail(case_id, inputs, expected, actual, witness);
}

void Report::absorb(const Report& other) {
  cases += other.cases;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& [k, v] : other.metrics) metrics[k] += v;
  seconds += other.seconds;
}

json to_json(const Report& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"case", f.case_id},
                        {"inputs", f.inputs},
                        {"expected", f.expected},
                        {"actual", f.actual},
                        {"witness", f.witness}});
  }
  return json{{"suite", r.suite}, {"status", r.status()}, {"cases", r.cases}, {"metrics", r.metrics},
              {"failures", failures}};
}

Report report_from_json(const json& j) {
  Report r;
  try {
    r.suite = j.at("suite").get<std::string>();
    r.cases = j.at("cases").get<Integer>();
    r.metrics = j.at("metrics").get<std::map<std::string, Integer>>();
    for (const auto& f : j.at("failures")) {
      r.failures.push_back({f.at("case").get<std::string>(), f.at("inputs"), f.at("expected").get<std::string>(),
                            f.at("actual").get<std::string>(), f.at("witness").get<std::string>()});
    }
    if (j.at("status").get<std::string>() != r.status()) throw ParseError("field 'status' contradicts 'failures'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  return r;
}

Report check_basis(CaseRng& rng, int s, int count, int max_level) {
  Report r{"basis"};
  for (int k = 0; k < count; ++k) {
    const int level = static_cast<int>(rng.uniform(1, max_level));
    const auto f = random_c1_function(rng, s, level);
    const std::string id = "basis/s=" + std::to_string(s) + "/" + std::to_string(k);
    ++r.cases;
    const auto direct = expand(f);
    const auto recursive = expand_recursive(f);
    r.expect(direct == recursive, id, to_json(f), describe(direct), describe(recursive), "expand vs expand_recursive");
    const auto back = reconstruct(direct, s);
    bool pointwise = back == f;
    Integer bad = -1;
    for (Integer z = 0; z < f.modulus() && pointwise; ++z) {
      if (oracle::expansion_value(direct, z, s) != f(z)) {
        pointwise = false;
        bad = z;
      }
    }
    r.expect(pointwise, id, to_json(f), "reconstruct(expand(f)) = f", "differs", "z=" + std::to_string(bad));
  }
  return r;
}

Report check_delta_e(int s, Integer bound) {
  Report r{"delta_e"};
  std::vector<Integer> t;
  for (Integer x = 2; x <= bound; ++x)
    if (in_T(x, s)) t.push_back(x);
  for (Integer x : t) {
    const auto f = generator(x, s);
    for (Integer z : t) {
      ++r.cases;
      const std::string id = "z=" + std::to_string(z) + ",x=" + std::to_string(x);
      const json inputs{{"s", s}, {"z", z}, {"x", x}};
      const Integer delta = oracle::generator_value(x, z, s);
      const Integer via_orbit = pair(delta_decompose(z, s), f);
      r.expect(via_orbit == delta, id, inputs, str(delta), str(via_orbit), "delta_z as orbit sum");
      r.expect(special_hom(SpecialKind::delta, z, f) == delta, id, inputs, str(delta),
               str(special_hom(SpecialKind::delta, z, f)), "delta_z(1_(x))");
      const Integer g = gamma_of(z, s);
      const Integer delta_g = g < 2 ? f(g) : oracle::generator_value(x, g, s);
      const Integer e = special_hom(SpecialKind::e, z, f);
      r.expect(e == delta - delta_g, id, inputs, str(delta - delta_g), str(e), "e_(z) = delta_z - delta_gamma(z)");
      r.expect(e == (z == x ? 1 : 0), id, inputs, z == x ? "1" : "0", str(e), "e_(z)(1_(x)) dual basis");
    }
  }
  return r;
}

Report check_sadic(CaseRng& rng, int s, int count) {
  Report r{"sadic"};
  const int precision = level_cap(s, Integer(1) << 40);
  const Integer mod = checked_pow(s, precision);
  for (int k = 0; k < count; ++k) {
    const Integer a = rng.uniform(-1000000, 1000000);
    const Integer b = rng.uniform(-1000000, 1000000);
    const auto xa = SAdic::from_integer(a, s, precision);
    const auto xb = SAdic::from_integer(b, s, precision);
    const json inputs{{"s", s}, {"a", a}, {"b", b}, {"precision", precision}};
    const std::string id = "sadic/" + std::to_string(k);
    ++r.cases;
    r.expect(oracle::digits_value(xa) == mod_floor(a, mod), id, inputs, str(mod_floor(a, mod)),
             str(oracle::digits_value(xa)), "digits of a");
    r.expect(xa + xb == SAdic::from_integer(a + b, s, precision), id, inputs, "a+b", "differs", "addition");
    r.expect(xa * xb == SAdic::from_integer(a * b, s, precision), id, inputs, "a*b",
             "differs", "multiplication");
    r.expect(-xa == SAdic::from_integer(-a, s, precision), id, inputs, "-a", "differs", "negation");
    r.expect((xa - xa).is_zero(), id, inputs, "0", "nonzero", "a-a");
    if (a != b) {
      const auto d = distance(xa, xb);
      const auto exact = norm_valuation(a - b, s);
      Integer m = 0;
      for (Integer v = a - b; v % s == 0; v /= s) ++m;
      r.expect(d.value == exact.value && exact.value == inverse_power(s, static_cast<int>(m)), id, inputs,
               str(inverse_power(s, static_cast<int>(m))), str(d.value), "|a-b|_s");
    }
    const auto na = norm_valuation(xa).value;
    const auto nb = norm_valuation(xb).value;
    const auto nsum = norm_valuation(xa + xb).value;
    r.expect(nsum <= std::max(na, nb), id, inputs, "<= " + str(std::max(na, nb)), str(nsum), "ultrametric");
  }
  return r;
}

Report check_lipschitz(CaseRng& rng, int s, int count, int max_level) {
  Report r{"lipschitz"};
  for (int k = 0; k < count; ++k) {
    const int level = static_cast<int>(rng.uniform(1, max_level));
    const auto f = random_units_rational(rng, s, level);
    const std::string id = "lipschitz/s=" + std::to_string(s) + "/" + std::to_string(k);
    ++r.cases;
    const Rational fast = lipschitz(f).constant;
    const Rational slow = oracle::lipschitz_all_pairs(f);
    r.expect(fast == slow, id, to_json(f), str(slow), str(fast), "level-pair vs all-pairs");
    const auto g = random_full_function(rng, s, level);
    r.expect(alpha_matches(g), id, to_json(g), "alpha(f)(z) = f(z/s) on sZ, 0 elsewhere", "differs", "alpha");
  }
  return r;
}

Report check_pairing(CaseRng& rng, int s, int count) {
  Report r{"pairing"};
  for (int k = 0; k < count; ++k) {
    const auto phi = random_hom(rng, s, 200, static_cast<int>(rng.uniform(1, 5)));
    const auto f = random_c1_function(rng, s, static_cast<int>(rng.uniform(1, level_cap(s, 256))));
    ++r.cases;
    const Integer fast = pair(phi, f);
    const Integer slow = oracle::pairing_by_definition(phi, f);
    Integer via_basis = 0;
    const auto e = expand(f);
    for (const auto& [y, c] : phi.coeffs()) {
      auto it = e.find(y);
      if (it != e.end()) via_basis += c * it->second;
    }
    const json inputs{{"phi", to_json(phi)}, {"f", to_json(f)}};
    const std::string id = "pairing/" + std::to_string(k);
    r.expect(fast == slow, id, inputs, str(slow), str(fast), "definition");
    r.expect(fast == via_basis, id, inputs, str(via_basis), str(fast), "sum phi_x f_(x)");
  }
  return r;
}

Report check_stacey(CaseRng& rng, int s, Integer window, int count) {
  Report r{"stacey"};
  const Window w(window);
  const int top = std::min(level_cap(s, 729), 4);
  for (int k = 0; k < count; ++k) {
    const auto f = random_full_function(rng, s, static_cast<int>(rng.uniform(1, top)));
    const auto rep = verify_stacey(f, w);
    ++r.cases;
    r.metrics["isometry_checked_columns"] += rep.isometry_checked;
    r.metrics["covariance_checked_columns"] += rep.covariance_checked;
    const std::string id = "stacey/s=" + std::to_string(s) + "/" + std::to_string(k);
    for (const auto& m : rep.mismatches) r.fail(id, to_json(f), m.relation, "column differs", "l=" + str(m.column));
    const Integer safe = 2 * (window / s) + 1;
    r.expect(rep.isometry_checked == safe, id, to_json(f), str(safe), str(rep.isometry_checked),
             "size of the V*V safe set");
  }
  ++r.cases;
  const auto shifts = build_shift(s, w);
  const auto vvstar = shifts.v.compose(shifts.v_star);
  const auto mu = build_mu_chi(chi_delta(0), s, w);
  const auto expected = dense_identity(w) - vvstar.matrix;
  r.metrics["chi0_checked_columns"] += static_cast<Integer>(w.labels().size());
  for (Integer l : w.labels()) {
    if (mu.matrix.column(l) != expected.column(l)) {
      r.fail("chi0/s=" + std::to_string(s), json{{"s", s}, {"window", window}}, "mu_chi0 = I - VV*", "column differs",
             "l=" + str(l));
    }
  }
  return r;
}

Report check_gauge(CaseRng& rng, int s, Integer window, const Rational& theta, int count) {
  Report r{"gauge"};
  const Window w(window);
  for (int k = 0; k < count; ++k) {
    const auto f = random_full_function(rng, s, static_cast<int>(rng.uniform(1, std::min(level_cap(s, 729), 3))));
    const auto rep = verify_gauge(theta, f, w);
    ++r.cases;
    r.metrics["gauge_checked_columns"] += rep.checked_columns;
    const json inputs{{"theta", format_rational(theta)}, {"f", to_json(f)}};
    const std::string id = "gauge/" + std::to_string(k);
    for (Integer c : rep.mismatched_columns) r.fail(id, inputs, "e^{2 pi i theta} V", "column differs", "l=" + str(c));
    r.expect(rep.multiplication_invariant, id, inputs, "rho_theta(M_f) = M_f", "differs", "multiplication");
  }
  return r;
}

Report check_index(CaseRng& rng, int s, int count, Integer support_bound, int outside, const LambdaParams& p) {
  Report r{"index"};
  for (int k = 0; k < count; ++k) {
    const auto phi = random_hom(rng, s, support_bound, static_cast<int>(rng.uniform(1, 6)));
    const std::string id = "index/" + std::to_string(k);
    ++r.cases;
    const Integer ident = pairing_identity(phi);
    r.expect(ident == 0, id, hom_inputs(phi), "0", str(ident), "pairing with [1]");

    std::vector<Integer> xs;
    for (const auto& [x, c] : phi.coeffs()) xs.push_back(x);
    for (int j = 0; j < outside;) {
      const Integer x = draw_T(rng, s, 2 * support_bound);
      if (phi.coeffs().contains(x)) continue;
      xs.push_back(x);
      ++j;
    }
    for (Integer x : xs) {
      const auto gen = generator(x, s);
      const Integer expected = phi.coefficient(x);
      const json inputs{{"phi", to_json(phi)}, {"x", x}};
      const auto rep = index_pairing(phi, gen);
      const std::string witness = rep.kernel_witnesses.empty() ? "" : to_string(rep.kernel_witnesses.front());
      r.expect(rep.index == expected, id, inputs, str(expected), str(rep.index), witness);
      const Integer by_def = oracle::pairing_by_definition(phi, gen);
      r.expect(pair(phi, gen) == expected && by_def == expected, id, inputs, str(expected), str(by_def),
               "Phi(1_(x))");
      const auto tri = triple_index(phi, p, gen);
      r.expect(tri.index == rep.index, id, inputs, str(rep.index), str(tri.index), "triple index");
    }
  }
  return r;
}

Report check_eta(int s, Integer bound) {
  Report r{"eta"};
  ++r.cases;
  r.expect(eta_pairing(IdentityClass{}) == 1, "eta/identity", json{{"s", s}}, "1", str(eta_pairing(IdentityClass{})));
  r.expect(eta_pairing(RangeComplementClass{}) == 0, "eta/I-VV*", json{{"s", s}}, "0",
           str(eta_pairing(RangeComplementClass{})));
  for (Integer x = 2; x <= bound; ++x) {
    if (!in_T(x, s)) continue;
    ++r.cases;
    const Integer v = eta_pairing(K0GeneratorClass{generator(x, s)});
    r.expect(v == 0, "eta/x=" + str(x), json{{"s", s}, {"x", x}}, "0", str(v));
  }
  return r;
}

Report check_axioms(CaseRng& rng, int s, const std::vector<Integer>& l_max_values, int count) {
  Report r{"axioms"};
  for (int k = 0; k < count; ++k) {
    const auto phi = random_hom(rng, s, 30, static_cast<int>(rng.uniform(1, 4)));
    const auto f = random_full_function(rng, s, static_cast<int>(rng.uniform(1, std::min(level_cap(s, 243), 3))));
    const Integer x = rng.uniform(0, 1) == 0 ? phi.coeffs().begin()->first : draw_T(rng, s, 30);
    const Integer p_max = *std::max_element(l_max_values.begin(), l_max_values.end());
    const Integer p = rng.uniform(0, std::max<Integer>(p_max, 1));
    const auto ideal = ideal_generator(x, p, s);
    const std::string id = "axioms/" + std::to_string(k);
    const json inputs{{"phi", to_json(phi)}, {"f", to_json(f)}, {"x", x}, {"p", p}};

    std::vector<Integer> ranks;
    for (Integer l_max : l_max_values) {
      ++r.cases;
      const ModuleTruncation mt(phi, l_max);
      const auto ax = check_module_axioms(mt, {ShiftGenerator{}, MultGenerator{f.cast<Rational>()}, ideal});
      r.expect(ax.ok(), id, inputs, "module axioms", "violated", "L_max=" + str(l_max));

      const auto cv = commutator_F(ShiftGenerator{}, mt);
      r.expect(cv.matrix.restrict_columns(cv.safe_cols).empty(), id, inputs, "[F, rho(V)] = 0", "nonzero",
               "L_max=" + str(l_max));

      const auto ci = commutator_F(ideal, mt);
      SparseMatrix<Rational> expected;
      for (Integer pos = 0; pos < mt.dimension(); ++pos) {
        const auto lab = mt.label(Parity::odd, pos);
        if (lab.l != p || lab.y != x) continue;
        expected.set(pos, pos, Rational(lab.sign == Sign::plus ? 1 : -1));
      }
      SparseMatrix<Rational> by_labels;
      for (Integer pos = 0; pos < mt.dimension(); ++pos) {
        const auto lab = mt.label(Parity::odd, pos);
        if (lab.l != p) continue;
        const Integer at_y = oracle::generator_value(x, lab.y, s);
        const Integer g = gamma_of(lab.y, s);
        const Integer at_g = g == 0 ? 0 : oracle::generator_value(x, g, s);
        const Integer v = lab.sign == Sign::plus ? at_y - at_g : at_g - at_y;
        if (v != 0) by_labels.set(pos, pos, Rational(static_cast<long>(v)));
      }
      const auto actual = ci.matrix.restrict_columns(ci.safe_cols);
      r.expect(actual == expected, id, inputs, "entries +-1 at y = x, l = p", "differs", "L_max=" + str(l_max));
      r.expect(actual == by_labels, id, inputs, "chi_p(l)(1_(x)(y) - 1_(x)(gamma y))", "differs",
               "L_max=" + str(l_max));
      ranks.push_back(rank(ci.matrix));
    }
    Integer stable = -1;
    for (std::size_t i = 0; i < l_max_values.size(); ++i) {
      const Integer want = l_max_values[i] >= p ? std::abs(phi.coefficient(x)) : 0;
      r.expect(ranks[i] == want, id, inputs, str(want), str(ranks[i]), "rank at L_max=" + str(l_max_values[i]));
      if (l_max_values[i] >= p) {
        if (stable >= 0) r.expect(ranks[i] == stable, id, inputs, str(stable), str(ranks[i]), "rank stability");
        stable = ranks[i];
      }
    }
  }
  return r;
}

Report check_spectral(CaseRng& rng, int s, const LambdaParams& p, Integer l_max, int families, int elements,
                      int symbols) {
  Report r{"spectral"};
  const json params{{"c1", format_rational(p.c1)}, {"c2", format_rational(p.c2)}, {"s", s}};
  for (int k = 0; k < 10; ++k) {
    const auto phi = random_hom(rng, s, 60, static_cast<int>(rng.uniform(1, 4)));
    ++r.cases;
    const auto n = comm_norm_shift(1, p, phi, l_max);
    const json inputs{{"params", params}, {"phi", to_json(phi)}, {"l_max", l_max}};
    const std::string id = "shift/" + std::to_string(k);
    r.expect(n.exact == p.c1 && n.entry_scan == p.c1, id, inputs, str(p.c1), str(n.entry_scan), "||[D, rho(V)]||");
    r.expect(std::abs(n.estimate - p.c1.get_d()) <= 1e-9, id, inputs, str(p.c1), std::to_string(n.estimate),
             "float estimate");
  }
  for (int k = 0; k < families; ++k) {
    const auto phi = random_hom(rng, s, 60, static_cast<int>(rng.uniform(1, 4)));
    const auto family = random_family(rng, s);
    ++r.cases;
    const auto n = comm_norm_mult(family, p, phi);
    const auto slow = oracle::mult_commutator_by_labels(family, p, phi);
    const json inputs{{"params", params}, {"phi", to_json(phi)}, {"family", family_json(family)}};
    const std::string id = "family/" + std::to_string(k);
    r.expect(n.exact == slow, id, inputs, str(slow), str(n.exact), "exact norm by labels");
    r.expect(n.exact <= n.bound, id, inputs, "<= " + str(n.bound), str(n.exact),
             n.exact_witness ? to_string(*n.exact_witness) : "");
  }
  for (int k = 0; k < elements; ++k) {
    const auto phi = random_hom(rng, s, 60, static_cast<int>(rng.uniform(1, 3)));
    const auto a = random_poly_element(rng, s);
    ++r.cases;
    const auto b = comm_bound_check(a, p, phi);
    const json inputs{{"params", params}, {"phi", to_json(phi)}, {"a", poly_json(a)}};
    const std::string id = "element/" + std::to_string(k);
    r.expect(b.lhs <= b.rhs, id, inputs, "<= " + str(b.rhs), str(b.lhs), "C ||a||_1");
    r.expect(b.toeplitz_lhs <= b.toeplitz_rhs, id, inputs, "<= " + str(b.toeplitz_rhs), str(b.toeplitz_lhs),
             "c1 ||phi||_1");
  }
  for (int k = 0; k < symbols; ++k) {
    const auto phi = random_hom(rng, s, 60, static_cast<int>(rng.uniform(1, 3)));
    PolyElement a;
    a.toeplitz = random_symbol(rng);
    ++r.cases;
    const auto b = comm_bound_check(a, p, phi);
    const json inputs{{"params", params}, {"phi", to_json(phi)}, {"symbol", to_json(a.toeplitz)}};
    const std::string id = "symbol/" + std::to_string(k);
    r.expect(b.toeplitz_lhs <= b.toeplitz_rhs, id, inputs, "<= " + str(b.toeplitz_rhs), str(b.toeplitz_lhs),
             "c1 ||phi||_1");
    Integer reach = 0;
    for (const auto& [m, c] : a.toeplitz) reach = std::max(reach, std::abs(m));
    const double est = toeplitz_commutator_estimate(a.toeplitz, p, phi, reach + 6);
    r.expect(est <= b.toeplitz_rhs.get_d() + 1e-9, id, inputs, "<= " + str(b.toeplitz_rhs), std::to_string(est),
             "float cross-check");
  }
  return r;
}

Report check_resolvent(CaseRng& rng, int s, const LambdaParams& p, Integer target) {
  Report r{"resolvent"};
  for (int k = 0; k < 5; ++k) {
    const auto phi = random_hom(rng, s, 60, static_cast<int>(rng.uniform(1, 4)));
    ++r.cases;
    const json inputs{{"phi", to_json(phi)}, {"c1", format_rational(p.c1)}, {"c2", format_rational(p.c2)}};
    const std::string id = "resolvent/" + std::to_string(k);
    Rational radius = 0;
    Integer previous = 0;
    Integer steps = 0;
    for (;;) {
      const Integer fast = resolvent_count(phi, p, radius);
      const Integer slow = oracle::resolvent_count_by_enumeration(phi, p, radius);
      if (fast != slow) {
        r.fail(id, inputs, str(slow), str(fast), "R=" + str(radius));
        break;
      }
      if (fast < previous) {
        r.fail(id, inputs, ">= " + str(previous), str(fast), "monotone at R=" + str(radius));
        break;
      }
      previous = fast;
      if (fast >= target) break;
      if (++steps > 100000) {
        r.fail(id, inputs, ">= " + str(target), str(fast), "count did not grow");
        break;
      }
      radius += p.c1 + radius / 8;
    }
    r.metrics["resolvent_max_count"] = std::max(r.metrics["resolvent_max_count"], previous);
  }
  return r;
}

void SuiteConfig::validate() const {
  if (s < 2) throw ParameterError("--s must be >= 2");
  if (window < 1) throw ParameterError("--window must be >= 1");
  if (l_max < 1) throw ParameterError("--lmax must be >= 1");
  if (c1 <= 0) throw ParameterError("--c1 must be > 0");
  if (c2 <= 0) throw ParameterError("--c2 must be > 0");
  if (suites.empty()) throw ParameterError("no suite selected");
  for (const auto& name : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw ParameterError("unknown suite '" + name + "'");
    }
  }
}

json to_json(const SuiteConfig& cfg) {
  return json{{"s", cfg.s},
              {"window", cfg.window},
              {"lmax", cfg.l_max},
              {"c1", format_rational(cfg.c1)},
              {"c2", format_rational(cfg.c2)},
              {"theta", format_rational(cfg.theta)},
              {"seed", cfg.seed},
              {"suites", cfg.suites}};
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  cfg.validate();
  const auto pos = std::find(suite_names().begin(), suite_names().end(), name) - suite_names().begin();
  CaseRng rng(cfg.seed + static_cast<std::uint64_t>(pos));
  const int s = cfg.s;
  const LambdaParams p(cfg.c1, cfg.c2);
  const auto start = std::chrono::steady_clock::now();
  Report r{name};
  if (name == "sadic") {
    r.absorb(check_sadic(rng, s, 200));
  } else if (name == "cylinder") {
    r.absorb(check_lipschitz(rng, s, 100, std::min(level_cap(s, 1024), 4)));
    r.absorb(check_basis(rng, s, 100, std::min(level_cap(s, 1024), 4)));
  } else if (name == "khom") {
    r.absorb(check_delta_e(s, 200));
    r.absorb(check_pairing(rng, s, 100));
  } else if (name == "stacey") {
    r.absorb(check_stacey(rng, s, cfg.window, 20));
    r.absorb(check_gauge(rng, s, std::min<Integer>(cfg.window, 200), cfg.theta, 5));
  } else if (name == "fredholm") {
    r.absorb(check_index(rng, s, 20, 100, 10, p));
    r.absorb(check_eta(s, 50));
    r.absorb(check_axioms(rng, s, {0, 1, cfg.l_max}, 10));
  } else if (name == "spectral") {
    r.absorb(check_spectral(rng, s, p, cfg.l_max, 30, 30, 20));
    r.absorb(check_resolvent(rng, s, p, 1000));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool SuiteRun::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
}

SuiteRun run_suites(const SuiteConfig& cfg) {
  cfg.validate();
  SuiteRun run{to_json(cfg), {}};
  for (const auto& name : suite_names()) {
    if (std::find(cfg.suites.begin(), cfg.suites.end(), name) != cfg.suites.end()) {
      run.reports.push_back(run_suite(name, cfg));
    }
  }
  return run;
}

json to_json(const SuiteRun& run) {
  json reports = json::array();
  for (const auto& r : run.reports) reports.push_back(to_json(r));
  return json{{"config", run.config}, {"status", run.passed() ? "pass" : "fail"}, {"reports", reports}};
}

SuiteRun suite_run_from_json(const json& j) {
  SuiteRun run;
  try {
    run.config = j.at("config");
    for (const auto& r : j.at("reports")) run.reports.push_back(report_from_json(r));
    if (j.at("status").get<std::string>() != (run.passed() ? "pass" : "fail")) {
      throw ParseError("field 'status' contradicts the reports");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("suite run: ") + e.what());
  }
  return run;
}

namespace {

void text_row(std::ostringstream& out, const Report& r) {
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %-5s %8lld %9zu %9.3f\n", r.suite.c_str(), r.status().c_str(),
                static_cast<long long>(r.cases), r.failures.size(), r.seconds);
  out << line;
}

void text_failures(std::ostringstream& out, const Report& r) {
  if (r.passed()) return;
  const auto& f = r.failures.front();
  out << r.suite << ": first failure " << f.case_id << ": expected " << f.expected << ", got " << f.actual;
  if (!f.witness.empty()) out << " [" << f.witness << "]";
  out << "\n";
}

}  // namespace

std::string report_emit(const SuiteRun& run, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(run).dump(2) + "\n";
  std::ostringstream out;
  out << "suite      status    cases  failures   seconds\n";
  for (const auto& r : run.reports) text_row(out, r);
  for (const auto& r : run.reports) text_failures(out, r);
  out << "status: " << (run.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string report_emit(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "suite      status    cases  failures   seconds\n";
  text_row(out, r);
  text_failures(out, r);
  return out.str();
}

}  // namespace hensel
