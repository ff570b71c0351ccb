#include <doctest.h>

#include "adet/fp.hpp"
#include "adet/int.hpp"
#include "adet/matrix.hpp"
#include "adet/rat.hpp"
#include "adet/rng.hpp"
#include "oracles.hpp"

using namespace adet;

namespace {

Int parse_int(const char* s) { return Int::from_string(s); }

std::vector<long long> to_ll(const LatticeVector& v) {
  std::vector<long long> out;
  for (const Int& x : v) out.push_back(x.to_int64());
  return out;
}

}  // namespace

TEST_CASE("Int arithmetic basics") {
  CHECK(Int(0).is_zero());
  CHECK(Int(0).canonical());
  CHECK((Int(2) + Int(3)) == Int(5));
  CHECK((Int(-2) * Int(3)) == Int(-6));
  CHECK((Int(7) - Int(10)) == Int(-3));
  CHECK(Int(-5) < Int(3));
  CHECK(Int::gcd(Int(12), Int(-18)) == Int(6));
  CHECK(Int::lcm(Int(4), Int(6)) == Int(12));
  CHECK(Int::pow(Int(3), 7) == Int(2187));
}

TEST_CASE("Int decimal round trip and big products") {
  Int a = parse_int("123456789012345678901234567890");
  CHECK(a.to_string() == "123456789012345678901234567890");
  CHECK((-a).to_string() == "-123456789012345678901234567890");
  Int b = parse_int("999999999999999999999999999999999999");
  CHECK((a * b).to_string() ==
        "123456789012345678901234567889999999876543210987654321098765432110");
  CHECK((a - a).is_zero());
  CHECK((a - a).canonical());
}

TEST_CASE("Int division is truncated with |r| < |b|") {
  CHECK(Int(7) / Int(2) == Int(3));
  CHECK(Int(7) % Int(2) == Int(1));
  CHECK(Int(-7) / Int(2) == Int(-3));
  CHECK(Int(-7) % Int(2) == Int(-1));
  CHECK(Int(7) / Int(-2) == Int(-3));
  CHECK(Int(7) % Int(-2) == Int(1));

  // randomized against the defining identity
  Rng rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    Int a(1), b(1);
    int la = 1 + static_cast<int>(rng.uniform(0, 3));
    int lb = 1 + static_cast<int>(rng.uniform(0, 2));
    for (int i = 0; i < la; ++i) a *= Int(static_cast<long long>(rng.next_u64() >> 1));
    for (int i = 0; i < lb; ++i) b *= Int(static_cast<long long>(rng.next_u64() >> 1) | 1);
    if (rng.uniform(0, 1)) a = -a;
    if (rng.uniform(0, 1)) b = -b;
    if (b.is_zero()) continue;
    Int q, r;
    Int::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    CHECK(q.canonical());
    CHECK(r.canonical());
    if (!r.is_zero()) CHECK(r.signum() == a.signum());
  }
}

TEST_CASE("Int canonical representation: unique zero, no high zero limbs") {
  Int a = parse_int("18446744073709551616");  // 2^64
  Int b = a - a;
  CHECK(b.is_zero());
  CHECK(b.limb_count() == 0);
  Int c = a - parse_int("18446744073709551615");
  CHECK(c == Int(1));
  CHECK(c.limb_count() == 1);
}

TEST_CASE("Rat canonical form") {
  CHECK(Rat(Int(4), Int(-8)).to_string() == "-1/2");
  CHECK(Rat(Int(0), Int(7)).to_string() == "0");
  CHECK(Rat::parse("-4/3").to_string() == "-4/3");
  CHECK(Rat::parse("6/4") == Rat(Int(3), Int(2)));
  CHECK((Rat::parse("1/3") + Rat::parse("1/6")) == Rat::parse("1/2"));
  CHECK((Rat::parse("2/3") * Rat::parse("9/4")) == Rat::parse("3/2"));
  CHECK(Rat::parse("-2/5").inverse().to_string() == "-5/2");
  CHECK(Rat::parse("2/3").pow(-2).to_string() == "9/4");
  CHECK(Rat::parse("1/2") < Rat::parse("2/3"));
}

TEST_CASE("prime field diagnostic arithmetic") {
  PrimeField f;  // default prime 1000003
  CHECK(f.modulus() == 1000003);
  uint64_t a = f.reduce(-5);
  CHECK(f.add(a, f.reduce(5)) == 0);
  for (uint64_t x : {1ull, 2ull, 999ull, 123456ull}) {
    CHECK(f.mul(x, f.inv(x)) == 1);
  }
  PrimeField f7(7);
  CHECK(f7.pow(3, 6) == 1);
}

TEST_CASE("integer kernel: quadratic example") {
  IntMatrix m = IntMatrix::from_rows({{0, 1, 2}, {1, 1, 1}});
  LatticeBasis basis = integer_kernel_basis(m);
  // brute-force oracle over [-3,3]
  auto brute = oracles::brute_kernel_vectors(m, 3);
  REQUIRE(basis.size() == 1);
  CHECK(to_ll(basis[0]) == std::vector<long long>{1, -2, 1});
  for (const auto& v : brute) CHECK(oracles::is_integer_combination(basis, v));
}

TEST_CASE("integer kernel: trivial cases") {
  CHECK(integer_kernel_basis(IntMatrix::from_rows({{1, 0}, {0, 1}})).empty());
  LatticeBasis basis = integer_kernel_basis(IntMatrix::from_rows({{1, 1}}));
  REQUIRE(basis.size() == 1);
  CHECK(to_ll(basis[0]) == std::vector<long long>{1, -1});  // first nonzero positive
}

TEST_CASE("integer kernel: exactness and completeness on bundled configurations") {
  std::vector<std::vector<std::vector<long long>>> configs = {
      {{0, 1}, {1, 1}},
      {{0, 1}, {1, 1}, {2, 1}},
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}},
  };
  for (const auto& pts : configs) {
    const size_t k = pts[0].size(), d = pts.size();
    IntMatrix m(k, d);
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < d; ++c) m.at(r, c) = Int(pts[c][r]);
    LatticeBasis basis = integer_kernel_basis(m);
    for (const auto& v : basis) {  // M v = 0 exactly
      for (size_t r = 0; r < k; ++r) {
        Int s(0);
        for (size_t c = 0; c < d; ++c) s += m.at(r, c) * v[c];
        CHECK(s.is_zero());
      }
    }
    for (const auto& v : oracles::brute_kernel_vectors(m, 3))
      CHECK(oracles::is_integer_combination(basis, v));
  }
}

TEST_CASE("rational row reduce: worked example") {
  RatMatrix m = RatMatrix::from_rows({{0, 2, 8}, {1, 2, 4}});
  RowReduceResult rr = rational_row_reduce(m);
  CHECK(rr.rank == 2);
  REQUIRE(rr.nullspace.size() == 1);
  CHECK(rr.nullspace[0] == std::vector<Rat>{Rat(4), Rat(-4), Rat(1)});
}

TEST_CASE("rational row reduce: trivial cases") {
  CHECK(rational_row_reduce(RatMatrix::from_rows({{1, 0}, {0, 1}})).rank == 2);
  CHECK(rational_row_reduce(RatMatrix::from_rows({{1, 0}, {0, 1}})).nullspace.empty());
  RowReduceResult zero = rational_row_reduce(RatMatrix::from_rows({{0, 0}, {0, 0}}));
  CHECK(zero.rank == 0);
  CHECK(zero.nullspace.size() == 2);
}

TEST_CASE("rational row reduce is idempotent") {
  Rng rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    RatMatrix m(3, 5);
    for (size_t r = 0; r < 3; ++r)
      for (size_t c = 0; c < 5; ++c) m.at(r, c) = rng.rational(6);
    RowReduceResult rr = rational_row_reduce(m);
    RowReduceResult rr2 = rational_row_reduce(rr.rref);
    CHECK(rr2.rank == rr.rank);
    CHECK(rr2.nullspace == rr.nullspace);
    CHECK(rr2.rref.entries == rr.rref.entries);
  }
}

TEST_CASE("Int handles the extreme int64 values") {
  Int mn(-9223372036854775807LL - 1);
  CHECK(mn.to_string() == "-9223372036854775808");
  CHECK(mn.fits_int64());
  CHECK(mn.to_int64() == -9223372036854775807LL - 1);
  CHECK((mn + Int(1)).to_string() == "-9223372036854775807");
}

TEST_CASE("Rat rejects zero denominators") {
  CHECK_THROWS_AS((void)Rat(Int(1), Int(0)), Error);
  CHECK_THROWS_AS((void)Rat::parse("4/0"), Error);
  CHECK_THROWS_AS((void)(Rat(1) / Rat(0)), Error);
}
