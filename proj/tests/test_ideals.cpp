#include <doctest.h>

#include <numeric>
#include <set>

#include "bianchi/ideals.hpp"

using namespace bianchi;

namespace {
PIdeal I(int d, const char* s) { return parse_ideal(Field::get(d), s); }
}

TEST_CASE("canonical generator") {
  const Field& f = Field::get(1);
  CHECK(PIdeal(f, f.make(1, -2)).gen() == f.make(2, 1));
  CHECK(PIdeal(f, f.zero()).is_zero());
  CHECK(PIdeal(f, f.make(0, -1)).is_unit_ideal());
  CHECK(I(1, "1-2*w") == I(1, "2+1*w"));
  CHECK(I(1, "-4-4*w").integer_generator() == 8);
  CHECK(I(1, "2+1*w").integer_generator() == 5);
  CHECK(I(3, "3").integer_generator() == 3);
  CHECK(I(11, "1-2*w").integer_generator() == 11);
}

TEST_CASE("residue systems") {
  CHECK(ResidueSystem(I(1, "2+1*w")).size() == 5);
  CHECK(ResidueSystem(I(1, "1")).size() == 1);
  CHECK(ResidueSystem(I(1, "2")).size() == 4);
  for (int d : {1, 2, 3, 7, 11})
    for (const char* s : {"3", "2+1*w", "4*w", "5-3*w", "1+1*w"}) {
      PIdeal n = I(d, s);
      ResidueSystem R(n);
      CHECK(R.size() == n.norm());
      auto reps = R.reps();
      for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(R.index(reps[i]) == static_cast<std::int64_t>(i));
        for (std::size_t j = 0; j < i; ++j) CHECK(!n.contains(reps[i] - reps[j]));
      }
      const Field& f = Field::get(d);
      QuadInt x = f.make(37, -11), y = f.make(-5, 8);
      CHECK(n.contains(R.reduce(x) - x));
      CHECK(R.rep(R.mul(R.index(x), R.index(y))) == R.reduce(x * y));
      CHECK(R.rep(R.add(R.index(x), R.index(y))) == R.reduce(x + y));
      CHECK(R.rep(R.sub(R.index(x), R.index(y))) == R.reduce(x - y));
    }
}

TEST_CASE("factor examples") {
  auto f5 = factor(I(1, "5"));
  REQUIRE(f5.size() == 2);
  std::set<PIdeal> got{f5[0].prime, f5[1].prime};
  CHECK(got == std::set<PIdeal>{I(1, "2+1*w"), I(1, "2-1*w")});
  CHECK(f5[0].exponent == 1);
  auto f3 = factor(I(1, "3"));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].prime == I(1, "3"));
  CHECK(f3[0].exponent == 1);
  CHECK(factor(I(1, "1")).empty());
  CHECK_THROWS_AS(factor(PIdeal(Field::get(1), Field::get(1).zero())), Error);
  auto f8 = factor(I(1, "-4-4*w"));
  REQUIRE(f8.size() == 1);
  CHECK(f8[0].prime == I(1, "1+1*w"));
  CHECK(f8[0].exponent == 5);
}

TEST_CASE("factor multiplies back") {
  for (int d : {1, 2, 3, 7, 11})
    for (const char* s : {"12", "6+4*w", "7-1*w", "30", "9+2*w"}) {
      PIdeal n = I(d, s);
      PIdeal prod(Field::get(d), Field::get(d).one());
      for (const PrimePower& pp : factor(n)) {
        CHECK(is_prime(pp.prime));
        for (int k = 0; k < pp.exponent; ++k) prod = prod * pp.prime;
      }
      CHECK(prod == n);
    }
}

TEST_CASE("primes and divisors") {
  CHECK(is_prime(I(1, "1+1*w")));
  CHECK(is_prime(I(1, "3")));
  CHECK(!is_prime(I(1, "5")));
  CHECK(!is_prime(I(1, "1")));
  CHECK(!is_prime(I(2, "3")));
  CHECK(is_prime(I(7, "w")));
  CHECK(!is_prime(I(7, "2-1*w")));
  CHECK(divisors(I(1, "5")).size() == 4);
  CHECK(divisors(I(1, "1")).size() == 1);
  auto ps = primes_up_to(Field::get(1), 13);
  // (1+i), (2+i), (2-i), (3), (3+2i), (3-2i)
  CHECK(ps.size() == 6);
  for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].norm() <= ps[i].norm());
}

TEST_CASE("quotients and coprimality") {
  CHECK(coprime(I(1, "2+1*w"), I(1, "2-1*w")));
  CHECK(!coprime(I(1, "2"), I(1, "1+1*w")));
  const Field& f = Field::get(1);
  CHECK(ideal_quotient(I(1, "4"), f.make(1, 1)) == I(1, "2+2*w"));
  CHECK(ideal_quotient(I(1, "5"), f.make(3)).is_unit_ideal() == false);
  CHECK(ideal_quotient(I(1, "5"), f.make(5)).is_unit_ideal());
  CHECK(ideal_sum(I(1, "2"), I(1, "3")).is_unit_ideal());
}

TEST_CASE("auxiliary prime search") {
  const Field& f = Field::get(1);
  CHECK(search_prime_coprime_normminus1(f, 7, 100) == I(1, "1+1*w"));
  PIdeal q5 = search_prime_coprime_normminus1(f, 5, 100);
  CHECK(std::gcd(q5.norm().get_si() - 1, 5L) == 1);
  CHECK_THROWS_AS(search_prime_coprime_normminus1(f, 3, 1), Error);
}

TEST_CASE("residues inside an ideal") {
  auto two = prime_residue_reps_in_ideal(I(1, "1+1*w"), I(1, "1"));
  CHECK(two.size() == 2);
  PIdeal l = I(1, "3"), c = I(1, "2+1*w");
  auto reps = prime_residue_reps_in_ideal(l, c);
  REQUIRE(reps.size() == 9);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(c.contains(reps[i]));
    for (std::size_t j = 0; j < i; ++j) CHECK(!l.contains(reps[i] - reps[j]));
  }
  CHECK_THROWS_AS(prime_residue_reps_in_ideal(I(1, "1+1*w"), I(1, "2")), Error);
}
