#include <doctest.h>

#include "adet/harness.hpp"
#include "adet/json_io.hpp"
#include "adet/rng.hpp"

using namespace adet;

namespace {

PointConfiguration quadratic() { return validate({{0, 1}, {1, 1}, {2, 1}}); }
PointConfiguration segment2() { return validate({{0, 1}, {1, 1}}); }
PointConfiguration cubic() { return validate({{0, 1}, {1, 1}, {2, 1}, {3, 1}}); }
PointConfiguration square() {
  return validate({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

VerificationPlan small_plan(const std::string& name, long long random_n,
                            long long stratum_n, uint64_t seed = 42) {
  VerificationPlan plan;
  plan.config_name = name;
  plan.n_random = random_n;
  plan.n_stratum_per_face = stratum_n;
  plan.seed = seed;
  return plan;
}

}  // namespace

TEST_CASE("sample generation is deterministic and seeded per index") {
  PointConfiguration a = quadratic();
  FaceLattice lattice = face_lattice(a);
  VerificationPlan plan = small_plan("quadratic", 10, 3);
  std::vector<SampleRecord> s1 = generate_samples(plan, a, lattice);
  std::vector<SampleRecord> s2 = generate_samples(plan, a, lattice);
  REQUIRE(s1.size() == 10 + 3 * lattice.faces.size());
  for (size_t i = 0; i < s1.size(); ++i) {
    CHECK(s1[i].alpha == s2[i].alpha);
    CHECK(s1[i].index == i);
  }
  // different seeds give different samples
  plan.seed = 43;
  std::vector<SampleRecord> s3 = generate_samples(plan, a, lattice);
  bool any_diff = false;
  for (size_t i = 0; i < s1.size(); ++i) any_diff = any_diff || !(s1[i].alpha == s3[i].alpha);
  CHECK(any_diff);
}

TEST_CASE("lemma check passes on the quadratic") {
  PointConfiguration a = quadratic();
  FaceLattice lattice = face_lattice(a);
  ToricIdeal toric = toric_ideal(a);
  VerificationReport r = run_lemma_check(small_plan("quadratic", 20, 5), a, lattice, toric);
  CHECK(r.counters.at("lemma").checked == 20 + 5 * 3);
  CHECK(r.counters.at("lemma").failed == 0);
  CHECK(r.failures.empty());
}

TEST_CASE("empty plan produces an empty report") {
  PointConfiguration a = quadratic();
  FaceLattice lattice = face_lattice(a);
  ToricIdeal toric = toric_ideal(a);
  VerificationReport r = run_lemma_check(small_plan("quadratic", 0, 0), a, lattice, toric);
  CHECK(r.counters.at("lemma").checked == 0);
  CHECK(r.total_failures() == 0);
}

TEST_CASE("injected bugs are detected on every stratum sample") {
  PointConfiguration a = quadratic();
  FaceLattice lattice = face_lattice(a);
  ToricIdeal toric = toric_ideal(a);
  VerificationPlan plan = small_plan("quadratic", 0, 4);
  plan.inject_bug = true;
  VerificationReport r = run_lemma_check(plan, a, lattice, toric);
  CHECK(r.counters.at("lemma").checked == 4 * 3);
  CHECK(r.counters.at("lemma").failed == 4 * 3);  // every stratum sample is a member
}

TEST_CASE("proposition check and absorption on segment2 and the square") {
  {
    PointConfiguration a = segment2();
    FaceLattice lattice = face_lattice(a);
    EASupport support = eA_support(a, lattice);
    VerificationReport r =
        run_proposition_check(small_plan("segment2", 10, 8), a, lattice, support);
    CHECK(r.counters.at("proposition").failed == 0);
    // the full face is not a hypersurface: its stratum samples exercise the
    // closure-free absorption claim
    CHECK(r.counters.at("absorption").checked == 8);
    CHECK(r.counters.at("absorption").failed == 0);
  }
  {
    PointConfiguration a = square();
    FaceLattice lattice = face_lattice(a);
    EASupport support = eA_support(a, lattice);
    VerificationReport r =
        run_proposition_check(small_plan("square", 6, 3), a, lattice, support);
    CHECK(r.counters.at("proposition").failed == 0);
    CHECK(r.counters.at("absorption").checked == 3 * 4);  // four edges
    CHECK(r.counters.at("absorption").failed == 0);
  }
}

TEST_CASE("oracle consistency check passes on the quadratic") {
  PointConfiguration a = quadratic();
  FaceLattice lattice = face_lattice(a);
  ToricIdeal toric = toric_ideal(a);
  VerificationReport r =
      run_oracle_consistency(small_plan("quadratic", 15, 4), a, lattice, toric);
  CHECK(r.counters.at("oracle").checked == 15 + 4 * 3);
  CHECK(r.counters.at("oracle").failed == 0);
}

TEST_CASE("normalized volume of the bundled configurations") {
  PointConfiguration seg = segment2();
  CHECK(normalized_volume(seg, face_lattice(seg)) == 1);
  PointConfiguration quad = quadratic();
  CHECK(normalized_volume(quad, face_lattice(quad)) == 2);
  PointConfiguration sq = square();
  CHECK(normalized_volume(sq, face_lattice(sq)) == 2);
  PointConfiguration cub = cubic();
  CHECK(normalized_volume(cub, face_lattice(cub)) == 3);
  PointConfiguration point = validate({{1}});
  CHECK(normalized_volume(point, face_lattice(point)) == 1);
}

TEST_CASE("verification reports are byte-identical across runs and thread counts") {
  PointConfiguration a = quadratic();
  FaceLattice lattice = face_lattice(a);
  VerificationPlan plan = small_plan("quadratic", 8, 2);
  plan.threads = 1;
  std::string first = report_to_json(run_verification(plan, a, lattice)).dump(2);
  std::string second = report_to_json(run_verification(plan, a, lattice)).dump(2);
  CHECK(first == second);
  plan.threads = 3;
  std::string parallel = report_to_json(run_verification(plan, a, lattice)).dump(2);
  CHECK(first == parallel);
}

TEST_CASE("generic finiteness dimension equals the normalized volume") {
  Rng rng(4242);
  for (const PointConfiguration& a : {quadratic(), square(), cubic()}) {
    FaceLattice lattice = face_lattice(a);
    ToricIdeal toric = toric_ideal(a);
    long long volume = normalized_volume(a, lattice);
    int found = 0;
    while (found < 4) {
      std::vector<Rat> alpha(a.d);
      for (size_t i = 0; i < a.d; ++i) alpha[i] = rng.rational(10);
      if (vA_membership(a, lattice, alpha).in_vA) continue;
      FinitenessReport fin = finiteness_test(a, toric, alpha);
      REQUIRE(fin.finite);
      CHECK(fin.dimension == static_cast<size_t>(volume));
      ++found;
    }
  }
}

TEST_CASE("verification passes on non-bundled configurations") {
  // triangle with a point in the middle of its hypotenuse: interior edge
  // points follow the face-index convention
  PointConfiguration tri =
      validate({{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {1, 1, 1}});
  FaceLattice lattice = face_lattice(tri);
  auto hyp = lattice.find({1, 2, 3});
  CHECK(hyp.has_value());  // the hypotenuse contains point 4
  VerificationPlan plan = small_plan("midpoint-triangle", 10, 4);
  CHECK(run_verification(plan, tri, lattice).total_failures() == 0);

  // simplex: empty toric ideal, n = 0
  PointConfiguration simplex = validate({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  FaceLattice slattice = face_lattice(simplex);
  CHECK(toric_ideal(simplex).generators.empty());
  CHECK(run_verification(small_plan("simplex", 10, 4), simplex, slattice)
            .total_failures() == 0);
}

TEST_CASE("negative coordinates work through the whole pipeline") {
  PointConfiguration shifted = validate({{-1, 1}, {0, 1}, {1, 1}});
  FaceLattice lattice = face_lattice(shifted);
  // the discriminant is translation invariant
  EASupport s = eA_support(shifted, lattice);
  VariableRegistry areg = alpha_registry(shifted);
  std::vector<std::string> rendered;
  for (const Polynomial& p : s.support)
    rendered.push_back(render(p, areg, MonomialOrder::grevlex()));
  CHECK(rendered == std::vector<std::string>{"a1", "a3", "a2^2 - 4*a1*a3"});
  CHECK(run_verification(small_plan("shifted-quadratic", 10, 4), shifted, lattice)
            .total_failures() == 0);
}
