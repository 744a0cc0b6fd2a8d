// hensel: verification harness and small calculators for the Hensel-Steinitz
// algebra, its K-homology pairings and the spectral triple.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hensel/codec.hpp"
#include "hensel/fredholm.hpp"
#include "hensel/spectral.hpp"
#include "hensel/suite.hpp"

using namespace hensel;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  int s = 2;
  Integer window = 1000;
  Integer l_max = 4;
  std::string c1 = "1";
  std::string c2 = "1";
  std::string theta = "1/3";
  std::uint64_t seed = 20240601;
  std::string json_out;
  std::vector<std::string> suites;
};

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path);
  out << text;
}

void emit(const json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!path.empty()) write_output(path, text);
}

json label_list(const std::vector<GradedBasisIndex>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(to_string(l));
  return out;
}

json index_json(const IndexReport& r) {
  return json{{"index", r.index},
              {"kernel_dim", r.kernel_dim},
              {"cokernel_dim", r.cokernel_dim},
              {"domain_dim", r.domain_dim},
              {"codomain_dim", r.codomain_dim},
              {"kernel_witnesses", label_list(r.kernel_witnesses)},
              {"cokernel_witnesses", label_list(r.cokernel_witnesses)}};
}

json expansion_json(const Expansion& e) {
  json out = json::array();
  for (const auto& [x, c] : e) out.push_back({{"x", x}, {"c", c}});
  return out;
}

int run_verify(const Common& c) {
  SuiteConfig cfg;
  cfg.s = c.s;
  cfg.window = c.window;
  cfg.l_max = c.l_max;
  cfg.c1 = parse_rational(c.c1);
  cfg.c2 = parse_rational(c.c2);
  cfg.theta = parse_rational(c.theta);
  cfg.seed = c.seed;
  if (!c.suites.empty()) cfg.suites = c.suites;
  cfg.output = c.json_out;
  cfg.validate();
  const auto run = run_suites(cfg);
  std::cout << report_emit(run, ReportFormat::text);
  if (!cfg.output.empty()) write_output(cfg.output, report_emit(run, ReportFormat::json));
  return run.exit_code();
}

int run_expand(const std::string& cyl, const std::string& json_out) {
  const auto f = int_cylinder_from_json(read_json_file(cyl));
  const auto direct = expand(f);
  const bool agree = direct == expand_recursive(f);
  emit(json{{"s", f.base()}, {"coeffs", expansion_json(direct)}, {"recursive_agrees", agree}}, json_out);
  return agree ? kPass : kFail;
}

int run_pair(const std::string& phi_path, std::optional<Integer> x, const std::string& cyl, Integer l_max,
             const std::string& json_out) {
  const auto phi = hom_from_json(read_json_file(phi_path));
  IntCylinder f = x ? generator(*x, phi.base()) : int_cylinder_from_json(read_json_file(cyl));
  json out{{"phi", to_json(phi)}, {"pair", pair(phi, f)}, {"pairing_identity", pairing_identity(phi, l_max)}};
  if (x) out["x"] = *x;
  bool ok = true;
  try {
    require_k0_indicator(f);
    const auto rep = index_pairing(phi, f, l_max);
    out["index_pairing"] = index_json(rep);
    ok = rep.index == out["pair"].get<Integer>();
  } catch (const DomainError& e) {
    out["index_pairing"] = nullptr;
    out["note"] = e.what();
  }
  emit(out, json_out);
  return ok ? kPass : kFail;
}

int run_norms(const std::string& phi_path, const Common& c, Integer m, const std::string& json_out) {
  const auto phi = hom_from_json(read_json_file(phi_path));
  const LambdaParams p(parse_rational(c.c1), parse_rational(c.c2));
  const auto n = comm_norm_shift(m, p, phi, c.l_max);
  emit(json{{"m", m},
            {"lmax", c.l_max},
            {"shift_norm", format_rational(n.exact)},
            {"shift_norm_entry_scan", format_rational(n.entry_scan)},
            {"shift_norm_estimate", n.estimate},
            {"constant", format_rational(commutator_constant(p, phi.base()))}},
       json_out);
  return n.exact == n.entry_scan ? kPass : kFail;
}

int run_count(const std::string& phi_path, const Common& c, const std::string& radius, const std::string& json_out) {
  const auto phi = hom_from_json(read_json_file(phi_path));
  const LambdaParams p(parse_rational(c.c1), parse_rational(c.c2));
  const Rational r = parse_rational(radius);
  emit(json{{"R", format_rational(r)}, {"count", resolvent_count(phi, p, r)}}, json_out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hensel-Steinitz algebra: verification suites and calculators"};
  app.require_subcommand(1);
  Common c;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--s", c.s, "base s >= 2");
    sub->add_option("--lmax", c.l_max, "largest l in module truncations");
    sub->add_option("--c1", c.c1, "Lambda coefficient of l (rational)");
    sub->add_option("--c2", c.c2, "Lambda coefficient of s^n(y) (rational)");
    sub->add_option("--json-out", c.json_out, "also write the JSON result here");
  };

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_model(verify);
  verify->add_option("--window", c.window, "operator window half-width M");
  verify->add_option("--seed", c.seed, "seed for generated cases");
  verify->add_option("--theta", c.theta, "gauge angle p/q");
  verify->add_option("--suite", c.suites, "suites to run (default all)")
      ->delimiter(',')
      ->check(CLI::IsMember(suite_names()));

  std::string cyl;
  auto* exp = app.add_subcommand("expand", "expand f in the basis 1_(x)");
  exp->add_option("--cyl", cyl, "cylinder function JSON")->required();
  exp->add_option("--json-out", c.json_out, "also write the JSON result here");

  std::string phi;
  std::optional<Integer> x;
  auto* pr = app.add_subcommand("pair", "Phi(f) and the index pairing");
  pr->add_option("--phi", phi, "homomorphism JSON")->required();
  auto* xo = pr->add_option("--x", x, "use f = 1_(x)");
  auto* co = pr->add_option("--cyl", cyl, "cylinder function JSON");
  xo->excludes(co);
  Integer pair_l_max = 0;
  pr->add_option("--lmax", pair_l_max, "truncation used for the module");
  pr->add_option("--json-out", c.json_out, "also write the JSON result here");

  Integer m = 1;
  auto* nm = app.add_subcommand("norms", "commutator norm of D with V^m");
  add_model(nm);
  nm->add_option("--phi", phi, "homomorphism JSON")->required();
  nm->add_option("--m", m, "shift power");

  std::string radius;
  auto* ct = app.add_subcommand("count", "labels with Lambda <= R");
  add_model(ct);
  ct->add_option("--phi", phi, "homomorphism JSON")->required();
  ct->add_option("--R", radius, "radius (rational)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return run_verify(c);
    if (*exp) return run_expand(cyl, c.json_out);
    if (*pr) {
      if (!x && cyl.empty()) throw ParameterError("pair needs --x or --cyl");
      return run_pair(phi, x, cyl, pair_l_max, c.json_out);
    }
    if (*nm) return run_norms(phi, c, m, c.json_out);
    if (*ct) return run_count(phi, c, radius, c.json_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
