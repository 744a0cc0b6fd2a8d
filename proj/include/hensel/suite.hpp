#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hensel/codec.hpp"
#include "hensel/fredholm.hpp"
#include "hensel/spectral.hpp"

namespace hensel {

/// Deterministic case generator.
///
/// Contract, so that cases can be replayed in any language: a 64-bit
/// Mersenne Twister (MT19937-64, default tempering) seeded with the 64-bit
/// seed; uniform(lo, hi) consumes one output x and returns lo + x mod (hi - lo + 1).
class CaseRng {
 public:
  explicit CaseRng(std::uint64_t seed) : engine_(seed) {}

  Integer uniform(Integer lo, Integer hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Largest level L >= 1 with s^L <= cap (at least 1).
int level_cap(int s, Integer cap);

/// Integer units function with values in [-3, 3] and f(1) = 0.
IntCylinder random_c1_function(CaseRng& rng, int s, int level);
/// Integer function on all of Z_s with values in [-3, 3].
IntCylinder random_full_function(CaseRng& rng, int s, int level);
/// Rational units function with values p/q, |p| <= 5, 1 <= q <= 4.
RatCylinder random_units_rational(CaseRng& rng, int s, int level);
/// Phi with `terms` indices drawn from T cap [2, bound] and coefficients in [-3, 3] \ {0}.
HomT random_hom(CaseRng& rng, int s, Integer bound, int terms);
/// Symbol with |m| <= 3 and rational coefficients.
ToeplitzSymbol<Rational> random_symbol(CaseRng& rng);
/// Family supported on l in [0, 3].
CylinderFamily random_family(CaseRng& rng, int s);
PolyElement random_poly_element(CaseRng& rng, int s);

struct Failure {
  std::string case_id;
  json inputs;
  std::string expected;
  std::string actual;
  std::string witness;

  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Outcome of one suite or check. Timing is kept out of the JSON form so
/// that identical configurations give byte-identical reports.
struct Report {
  Report() = default;
  explicit Report(std::string name) : suite(std::move(name)) {}

  std::string suite;
  Integer cases = 0;
  std::vector<Failure> failures;
  std::map<std::string, Integer> metrics;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
  std::string status() const { return passed() ? "pass" : "fail"; }

  void fail(std::string case_id, json inputs, std::string expected, std::string actual, std::string witness = "");
  /// Records a failure unless `ok`.
  void expect(bool ok, const std::string& case_id, const json& inputs, const std::string& expected,
              const std::string& actual, const std::string& witness = "");
  /// Appends cases, failures and metrics of `other` (metrics are summed).
  void absorb(const Report& other);

  /// Equality of everything that is serialized.
  friend bool operator==(const Report& a, const Report& b) {
    return a.suite == b.suite && a.cases == b.cases && a.failures == b.failures && a.metrics == b.metrics;
  }
};

json to_json(const Report& r);
Report report_from_json(const json& j);

// One check per verified statement. Each one is deterministic given its RNG state.

/// reconstruct(expand(f)) = f and expand = expand_recursive, `count` random functions.
Report check_basis(CaseRng& rng, int s, int count, int max_level);
/// delta_z = sum of e over the gamma orbit and e_(z) = delta_z - delta_gamma(z),
/// tested on every 1_(x), for z, x in T cap [2, bound].
Report check_delta_e(int s, Integer bound);
/// Ring homomorphism Z -> Z/s^N, digit values, norms and ultrametric inequality.
Report check_sadic(CaseRng& rng, int s, int count);
/// Level-pair Lipschitz constant against the all-pairs scan, and alpha(f)(s u) = f(u).
Report check_lipschitz(CaseRng& rng, int s, int count, int max_level);
/// Phi(f) against the definition and against sum phi_x f_(x).
Report check_pairing(CaseRng& rng, int s, int count);
/// Both crossed-product relations on safe columns, and mu_chi0 = I - VV* on all columns.
Report check_stacey(CaseRng& rng, int s, Integer window, int count);
/// rho_theta(V) = e^{2 pi i theta} V off l = 0 and rho_theta(M_f) = M_f.
Report check_gauge(CaseRng& rng, int s, Integer window, const Rational& theta, int count);
/// index_pairing against phi_(x) and Phi(1_(x)), pairing_identity = 0, and triple_index agreement.
Report check_index(CaseRng& rng, int s, int count, Integer support_bound, int outside, const LambdaParams& p);
/// eta(identity) = 1 and eta(K0 generator) = 0.
Report check_eta(int s, Integer bound);
/// Module axioms, [F, rho(V)] = 0 and the finite-rank commutators with their entries.
Report check_axioms(CaseRng& rng, int s, const std::vector<Integer>& l_max_values, int count);
/// Commutator norms with D against their bounds.
Report check_spectral(CaseRng& rng, int s, const LambdaParams& p, Integer l_max, int families, int elements,
                      int symbols);
/// resolvent_count against enumeration, monotone, and growing past `target`.
Report check_resolvent(CaseRng& rng, int s, const LambdaParams& p, Integer target);

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sadic", "cylinder", "khom", "stacey", "fredholm", "spectral"};
  return names;
}

struct SuiteConfig {
  int s = 2;
  Integer window = 1000;
  Integer l_max = 4;
  Rational c1 = 1;
  Rational c2 = 1;
  Rational theta{1, 3};
  std::uint64_t seed = 20240601;
  std::vector<std::string> suites = suite_names();
  std::string output;

  /// ParameterError on s < 2, window < 1, l_max < 1, c1 or c2 <= 0, or an unknown suite.
  void validate() const;
};

json to_json(const SuiteConfig& cfg);

struct SuiteRun {
  json config;
  std::vector<Report> reports;

  bool passed() const;
  /// 0 when every report passes, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }
};

/// One suite. Each suite draws from its own generator, seeded with
/// seed + (position of the suite in suite_names()).
Report run_suite(const std::string& name, const SuiteConfig& cfg);
/// The selected suites in canonical order.
SuiteRun run_suites(const SuiteConfig& cfg);

enum class ReportFormat { json, text };

json to_json(const SuiteRun& run);
SuiteRun suite_run_from_json(const json& j);
std::string report_emit(const SuiteRun& run, ReportFormat format);
std::string report_emit(const Report& r, ReportFormat format);

}  // namespace hensel
