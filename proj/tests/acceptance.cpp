// Acceptance suite: runs every acceptance criterion at full sample size and
// prints one PASS/FAIL line per criterion. Exit code is the number of failed
// criteria.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "adet/cli.hpp"
#include "adet/harness.hpp"
#include "adet/json_io.hpp"
#include "adet/rng.hpp"
#include "oracles.hpp"

using namespace adet;

namespace {

struct BundledConfig {
  std::string name;
  PointConfiguration config;
  FaceLattice lattice;
  ToricIdeal toric;
};

std::vector<BundledConfig> bundled() {
  std::vector<std::pair<std::string, std::vector<std::vector<long long>>>> defs = {
      {"segment2", {{0, 1}, {1, 1}}},
      {"quadratic", {{0, 1}, {1, 1}, {2, 1}}},
      {"twisted-cubic", {{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
      {"square", {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}},
  };
  std::vector<BundledConfig> out;
  for (auto& [name, pts] : defs) {
    BundledConfig b;
    b.name = name;
    b.config = validate(pts);
    b.lattice = face_lattice(b.config);
    b.toric = toric_ideal(b.config);
    out.push_back(std::move(b));
  }
  return out;
}

VerificationPlan full_plan(const std::string& name) {
  VerificationPlan plan;
  plan.config_name = name;
  plan.n_random = 200;
  plan.n_stratum_per_face = 50;
  plan.seed = 42;
  plan.coeff_bound = 10;
  plan.threads = 0;  // use whatever the machine offers
  return plan;
}

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail, double seconds) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << " ("
            << name << "): " << detail << "  [" << seconds << "s]" << std::endl;
  if (!pass) ++g_failures;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// criterion 1: lemma equivalence, 200 random + 50 stratum per face, exact
void criterion_lemma(const std::vector<BundledConfig>& configs) {
  auto t0 = std::chrono::steady_clock::now();
  long long checked = 0, failed = 0;
  for (const BundledConfig& b : configs) {
    VerificationReport r =
        run_lemma_check(full_plan(b.name), b.config, b.lattice, b.toric);
    checked += r.counters.at("lemma").checked;
    failed += r.counters.at("lemma").failed;
  }
  double secs = elapsed(t0);
  std::ostringstream detail;
  detail << checked << " samples, " << failed << " mismatches";
  bool time_ok = secs < 300.0;
  if (!time_ok) detail << ", exceeded the 5 minute target";
  report(1, "lemma equivalence", failed == 0 && time_ok, detail.str(), secs);
}

// criterion 2: proposition pointwise + closure-free absorption
void criterion_proposition(const std::vector<BundledConfig>& configs) {
  auto t0 = std::chrono::steady_clock::now();
  long long checked = 0, failed = 0, absorption_checked = 0, absorption_failed = 0;
  for (const BundledConfig& b : configs) {
    EASupport support = eA_support(b.config, b.lattice);
    VerificationReport r =
        run_proposition_check(full_plan(b.name), b.config, b.lattice, support);
    checked += r.counters.at("proposition").checked;
    failed += r.counters.at("proposition").failed;
    absorption_checked += r.counters.at("absorption").checked;
    absorption_failed += r.counters.at("absorption").failed;
  }
  std::ostringstream detail;
  detail << checked << " samples, " << failed << " mismatches; absorption "
         << absorption_checked << " samples, " << absorption_failed
         << " escapes";
  bool pass = failed == 0 && absorption_failed == 0 && absorption_checked > 0;
  report(2, "proposition pointwise", pass, detail.str(), elapsed(t0));
}

// criterion 3: symbolic supports against independent oracles
void criterion_symbolic(const std::vector<BundledConfig>& configs) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream detail;
  for (const BundledConfig& b : configs) {
    if (b.name == "segment2") continue;
    auto tc = std::chrono::steady_clock::now();
    EASupport s = eA_support(b.config, b.lattice);
    VariableRegistry areg = alpha_registry(b.config);
    MonomialOrder grev = MonomialOrder::grevlex();
    std::vector<std::string> got;
    for (const Polynomial& p : s.support) got.push_back(render(p, areg, grev));

    std::vector<std::string> expect;
    if (b.name == "quadratic" || b.name == "twisted-cubic") {
      // vertex coordinates plus the resultant-derived discriminant
      expect.push_back("a1");
      expect.push_back("a" + std::to_string(b.config.d));
      expect.push_back(
          render(oracles::univariate_discriminant(b.config), areg, grev));
    } else {  // square
      expect = {"a1", "a2", "a3", "a4",
                render(parse_polynomial("a1*a4 - a2*a3", areg)
                           .normalized_primitive(grev),
                       areg, grev)};
    }
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    bool ok = got == expect && elapsed(tc) < 120.0;
    if (!ok) {
      pass = false;
      detail << b.name << " support mismatch; ";
    }
  }
  if (pass) detail << "quadratic, twisted-cubic and square supports match";
  report(3, "symbolic E_A supports", pass, detail.str(), elapsed(t0));
}

// criterion 4: oracle equivalence with termination and window bounds
void criterion_oracle(const std::vector<BundledConfig>& configs) {
  auto t0 = std::chrono::steady_clock::now();
  long long checked = 0, failed = 0;
  for (const BundledConfig& b : configs) {
    VerificationReport r =
        run_oracle_consistency(full_plan(b.name), b.config, b.lattice, b.toric);
    checked += r.counters.at("oracle").checked;
    failed += r.counters.at("oracle").failed;
  }
  std::ostringstream detail;
  detail << checked << " samples, " << failed << " inconsistencies";
  report(4, "groebner/hilbert oracle equivalence", failed == 0, detail.str(),
         elapsed(t0));
}

// criterion 5: orbit points satisfy I_A; non-face subset points violate it
void criterion_orbits(const std::vector<BundledConfig>& configs) {
  auto t0 = std::chrono::steady_clock::now();
  long long face_checks = 0, subset_checks = 0, failures = 0;
  for (const BundledConfig& b : configs) {
    const PointConfiguration& a = b.config;
    for (size_t fp = 0; fp < b.lattice.faces.size(); ++fp) {
      for (int iter = 0; iter < 10; ++iter) {
        Rng rng(derive_seed(42, 1000 * fp + static_cast<size_t>(iter)));
        std::vector<Rat> u(a.k);
        for (size_t i = 0; i < a.k; ++i) u[i] = rng.nonzero_rational(10);
        std::vector<Rat> z = orbit_point(a, b.lattice.faces[fp], u);
        std::vector<std::optional<Rat>> assignment(z.begin(), z.end());
        for (const Polynomial& g : b.toric.generators)
          if (!g.evaluate(assignment).is_zero()) ++failures;
        ++face_checks;
      }
    }
    // non-face subsets, deterministically seeded
    std::vector<std::vector<size_t>> non_faces;
    for (size_t mask = 1; mask < (1u << a.d); ++mask) {
      std::vector<size_t> subset;
      for (size_t i = 0; i < a.d; ++i)
        if (mask & (1u << i)) subset.push_back(i);
      if (!b.lattice.find(subset)) non_faces.push_back(subset);
    }
    if (non_faces.empty()) continue;  // every subset of segment2 is a face
    for (int iter = 0; iter < 5; ++iter) {
      Rng rng(derive_seed(43, static_cast<uint64_t>(iter)));
      const auto& subset = non_faces[static_cast<size_t>(iter) % non_faces.size()];
      std::vector<Rat> u(a.k);
      for (size_t i = 0; i < a.k; ++i) u[i] = rng.nonzero_rational(10);
      std::vector<Rat> z = subset_point(a, subset, u);
      std::vector<std::optional<Rat>> assignment(z.begin(), z.end());
      bool violated = false;
      for (const Polynomial& g : b.toric.generators)
        if (!g.evaluate(assignment).is_zero()) violated = true;
      if (!violated) ++failures;
      ++subset_checks;
    }
  }
  std::ostringstream detail;
  detail << face_checks << " orbit checks, " << subset_checks
         << " non-face checks, " << failures << " failures";
  report(5, "toric orbit consistency", failures == 0, detail.str(), elapsed(t0));
}

// criterion 6: generic finiteness dimension equals the normalized volume
void criterion_volume(const std::vector<BundledConfig>& configs) {
  auto t0 = std::chrono::steady_clock::now();
  long long failures = 0, checked = 0;
  for (const BundledConfig& b : configs) {
    if (b.name == "segment2") continue;
    long long volume = normalized_volume(b.config, b.lattice);
    long long expected = b.name == "twisted-cubic" ? 3 : 2;
    if (volume != expected) ++failures;
    int found = 0;
    uint64_t counter = 0;
    while (found < 20) {
      Rng rng(derive_seed(44, ++counter));
      std::vector<Rat> alpha(b.config.d);
      for (size_t i = 0; i < b.config.d; ++i) alpha[i] = rng.rational(10);
      if (vA_membership(b.config, b.lattice, alpha).in_vA) continue;
      FinitenessReport fin = finiteness_test(b.config, b.toric, alpha);
      if (!fin.finite || fin.dimension != static_cast<size_t>(volume)) ++failures;
      ++checked;
      ++found;
    }
  }
  std::ostringstream detail;
  detail << checked << " non-member samples across 3 configurations, "
         << failures << " failures";
  report(6, "generic dimension equals normalized volume", failures == 0,
         detail.str(), elapsed(t0));
}

// criterion 7: byte-identical verify reports, sequential and parallel
void criterion_determinism() {
  auto t0 = std::chrono::steady_clock::now();
  auto run = [](const std::string& threads) {
    std::ostringstream out, err;
    int code = cli::run({"verify", "--config", "builtin:quadratic", "--samples",
                         "25", "--stratum", "5", "--seed", "42", "--threads",
                         threads},
                        out, err);
    return std::make_pair(code, out.str());
  };
  auto [c1, r1] = run("1");
  auto [c2, r2] = run("1");
  auto [c3, r3] = run("4");
  bool pass = c1 == 0 && c2 == 0 && c3 == 0 && r1 == r2 && r1 == r3;
  report(7, "verify determinism", pass,
         pass ? "three runs byte-identical (1, 1 and 4 threads)"
              : "reports differ across runs",
         elapsed(t0));
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<BundledConfig> configs = bundled();
  criterion_lemma(configs);
  criterion_proposition(configs);
  criterion_symbolic(configs);
  criterion_oracle(configs);
  criterion_orbits(configs);
  criterion_volume(configs);
  criterion_determinism();
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED")
            << "  [" << elapsed(t0) << "s total]" << std::endl;
  return g_failures;
}
