#include <doctest.h>

#include "adet/discriminant.hpp"
#include "adet/rng.hpp"
#include "adet/toric.hpp"
#include "oracles.hpp"

using namespace adet;

namespace {

PointConfiguration quadratic() { return validate({{0, 1}, {1, 1}, {2, 1}}); }
PointConfiguration segment2() { return validate({{0, 1}, {1, 1}}); }
PointConfiguration cubic() { return validate({{0, 1}, {1, 1}, {2, 1}, {3, 1}}); }
PointConfiguration square() {
  return validate({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

std::vector<std::string> rendered(const ToricIdeal& t) {
  std::vector<std::string> out;
  for (const Polynomial& g : t.generators)
    out.push_back(render(g, t.registry, MonomialOrder::grevlex()));
  return out;
}

std::vector<std::optional<Rat>> as_assignment(const std::vector<Rat>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("toric ideal of the bundled configurations") {
  CHECK(rendered(toric_ideal(quadratic())) ==
        std::vector<std::string>{"z2^2 - z1*z3"});
  CHECK(toric_ideal(segment2()).generators.empty());
  CHECK(rendered(toric_ideal(square())) ==
        std::vector<std::string>{"z2*z3 - z1*z4"});
  // twisted cubic needs all three quadrics; saturation supplies the third
  CHECK(rendered(toric_ideal(cubic())).size() == 3);
}

TEST_CASE("toric ideal is saturated") {
  for (const PointConfiguration& a : {quadratic(), cubic(), square()}) {
    ToricIdeal t = toric_ideal(a);
    std::vector<size_t> all;
    for (size_t i = 0; i < a.d; ++i) all.push_back(i);
    Ideal sat = saturate_by_product(Ideal(t.registry, t.generators), all);
    ReducedGB gb_sat = reduced_groebner_basis(sat, MonomialOrder::grevlex());
    ReducedGB gb = reduced_groebner_basis(Ideal(t.registry, t.generators),
                                          MonomialOrder::grevlex());
    CHECK(gb_sat.basis == gb.basis);
  }
}

TEST_CASE("semigroup degree basis") {
  PointConfiguration a = quadratic();
  CHECK(semigroup_degree_basis(a, 0) ==
        std::vector<std::vector<long long>>{{0, 0}});
  CHECK(semigroup_degree_basis(a, 1) ==
        std::vector<std::vector<long long>>{{0, 1}, {1, 1}, {2, 1}});
  CHECK(semigroup_degree_basis(a, 2) ==
        std::vector<std::vector<long long>>{{0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 2}});
}

TEST_CASE("degree basis sizes are nondecreasing on the bundled configurations") {
  for (const PointConfiguration& a : {segment2(), quadratic(), cubic(), square()}) {
    size_t prev = 1;
    for (size_t n = 1; n <= 8; ++n) {
      size_t cur = semigroup_degree_basis(a, n).size();
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("orbit point worked examples") {
  PointConfiguration quad = quadratic();
  FaceLattice lattice = face_lattice(quad);
  std::vector<Rat> u21 = {Rat(2), Rat(1)};
  CHECK(orbit_point(quad, lattice.full_face(), u21) ==
        std::vector<Rat>{Rat(1), Rat(2), Rat(4)});
  std::vector<Rat> u23 = {Rat(2), Rat(3)};
  CHECK(orbit_point(quad, lattice.faces[0], u23) ==
        std::vector<Rat>{Rat(3), Rat(0), Rat(0)});

  PointConfiguration sq = square();
  FaceLattice sql = face_lattice(sq);
  auto edge = sql.find({0, 1});
  REQUIRE(edge.has_value());
  std::vector<Rat> u211 = {Rat(2), Rat(1), Rat(1)};
  CHECK(orbit_point(sq, sql.faces[*edge], u211) ==
        std::vector<Rat>{Rat(1), Rat(2), Rat(0), Rat(0)});

  std::vector<Rat> with_zero = {Rat(0), Rat(1)};
  CHECK_THROWS_AS((void)orbit_point(quad, lattice.full_face(), with_zero), Error);
}

TEST_CASE("orbit points satisfy the toric ideal; non-face subsets violate it") {
  Rng rng(99);
  for (const PointConfiguration& a : {quadratic(), cubic(), square()}) {
    ToricIdeal t = toric_ideal(a);
    FaceLattice lattice = face_lattice(a);
    for (const Face& f : lattice.faces) {
      for (int iter = 0; iter < 5; ++iter) {
        std::vector<Rat> u(a.k);
        for (size_t i = 0; i < a.k; ++i) u[i] = rng.nonzero_rational(10);
        std::vector<Rat> z = orbit_point(a, f, u);
        for (const Polynomial& g : t.generators)
          CHECK(g.evaluate(as_assignment(z)).is_zero());
      }
    }
    // non-face index subsets
    std::vector<std::vector<size_t>> all_subsets;
    for (size_t mask = 1; mask < (1u << a.d); ++mask) {
      std::vector<size_t> subset;
      for (size_t i = 0; i < a.d; ++i)
        if (mask & (1u << i)) subset.push_back(i);
      if (!lattice.find(subset)) all_subsets.push_back(subset);
    }
    for (const auto& subset : all_subsets) {
      std::vector<Rat> u(a.k);
      for (size_t i = 0; i < a.k; ++i) u[i] = rng.nonzero_rational(10);
      std::vector<Rat> z = subset_point(a, subset, u);
      bool violated = false;
      for (const Polynomial& g : t.generators)
        if (!g.evaluate(as_assignment(z)).is_zero()) violated = true;
      CHECK(violated);
    }
  }
}

TEST_CASE("hilbert profile worked examples") {
  PointConfiguration quad = quadratic();

  HilbertProfile nondegenerate =
      hilbert_quotient_profile(quad, {Rat(1), Rat(3), Rat(1)}, 10);
  CHECK(nondegenerate.dims == std::vector<long long>{1, 1, 0});
  CHECK(nondegenerate.reached_zero);
  CHECK(nondegenerate.zero_at == 2);
  CHECK(nondegenerate.total() == 2);

  HilbertProfile degenerate =
      hilbert_quotient_profile(quad, {Rat(1), Rat(2), Rat(1)}, 25);
  CHECK(degenerate.cap_hit);
  CHECK(degenerate.dims.size() == 26);
  for (long long d : degenerate.dims) CHECK(d == 1);

  PointConfiguration tiny = validate({{1}});
  HilbertProfile point = hilbert_quotient_profile(tiny, {Rat(1)}, 10);
  CHECK(point.dims == std::vector<long long>{1, 0});
  CHECK(point.reached_zero);
  CHECK(point.zero_at == 1);
}

TEST_CASE("hilbert profile agrees with the direct image-rank oracle") {
  Rng rng(1234);
  for (const PointConfiguration& a : {segment2(), quadratic(), cubic(), square()}) {
    for (int iter = 0; iter < 6; ++iter) {
      std::vector<Rat> alpha(a.d);
      for (size_t i = 0; i < a.d; ++i) alpha[i] = rng.rational(4);
      const size_t upto = 6;
      std::vector<long long> expect = oracles::profile_by_image_rank(a, alpha, upto);
      HilbertProfile got = hilbert_quotient_profile(a, alpha, upto, upto);
      for (size_t n = 0; n < got.dims.size() && n <= upto; ++n)
        CHECK(got.dims[n] == expect[n]);
      // entries past the recorded prefix are zero by the vanishing window
      if (got.reached_zero)
        for (size_t n = got.dims.size(); n <= upto; ++n) CHECK(expect[n] == 0);
    }
  }
}

TEST_CASE("vanishing window: entries past the first zero stay zero") {
  Rng rng(555);
  for (const PointConfiguration& a : {quadratic(), square()}) {
    for (int iter = 0; iter < 8; ++iter) {
      std::vector<Rat> alpha(a.d);
      for (size_t i = 0; i < a.d; ++i) alpha[i] = rng.rational(6);
      HilbertProfile p = hilbert_quotient_profile(a, alpha, 12, 5);
      if (!p.reached_zero) continue;
      // verified against the independent oracle, past the first zero
      std::vector<long long> expect =
          oracles::profile_by_image_rank(a, alpha, p.zero_at + 5);
      for (size_t n = p.zero_at; n <= p.zero_at + 5; ++n) {
        REQUIRE(n < p.dims.size());
        CHECK(p.dims[n] == 0);
        CHECK(expect[n] == 0);
      }
    }
  }
}

TEST_CASE("bridge: groebner dimension equals the profile total") {
  Rng rng(31);
  for (const PointConfiguration& a : {segment2(), quadratic(), cubic(), square()}) {
    ToricIdeal t = toric_ideal(a);
    for (int iter = 0; iter < 10; ++iter) {
      std::vector<Rat> alpha(a.d);
      for (size_t i = 0; i < a.d; ++i) alpha[i] = rng.rational(6);
      FinitenessReport fin = finiteness_test(a, t, alpha);
      if (fin.finite) {
        HilbertProfile p = hilbert_quotient_profile(a, alpha, fin.dimension + 2);
        CHECK(p.reached_zero);
        CHECK(p.total() == static_cast<long long>(fin.dimension));
      } else {
        HilbertProfile p = hilbert_quotient_profile(a, alpha, 25);
        CHECK(p.cap_hit);
        for (long long d : p.dims) CHECK(d > 0);
      }
    }
  }
}
