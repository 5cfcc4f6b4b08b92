#include <random>

#include <catch_amalgamated.hpp>

#include "amhs/bernoulli.hpp"
#include "amhs/primes.hpp"

using namespace amhs;

TEST_CASE("exact Bernoulli numbers", "[bernoulli]") {
  CHECK(bernoulli_exact(0) == 1);
  CHECK(bernoulli_exact(1) == BigRational(-1, 2));
  CHECK(bernoulli_exact(2) == BigRational(1, 6));
  CHECK(bernoulli_exact(3) == 0);
  CHECK(bernoulli_exact(4) == BigRational(-1, 30));
  CHECK(bernoulli_exact(12) == BigRational(-691, 2730));
  // Frozen from an independent computer-algebra evaluation.
  CHECK(bernoulli_exact(20) == BigRational(-174611, 330));
  CHECK(bernoulli_exact(30) == BigRational(BigInt("8615841276005"), BigInt(14322)));
  for (std::size_t n = 3; n < 60; n += 2) REQUIRE(bernoulli_exact(n) == 0);
}

TEST_CASE("von Staudt-Clausen denominators", "[bernoulli]") {
  for (std::size_t n = 2; n <= 120; n += 2) {
    BigInt expected = 1;
    for (u64 p : primes_in_range(2, n + 1)) {
      if (n % (p - 1) == 0) expected *= static_cast<unsigned long>(p);
    }
    REQUIRE(bernoulli_exact(n).denominator() == expected);
  }
}

TEST_CASE("cache bounds", "[bernoulli]") {
  BernoulliCache small(10);
  CHECK(small.get(10) == BigRational(5, 66));
  CHECK_THROWS_AS(small.get(11), std::out_of_range);
}

TEST_CASE("Bernoulli numbers modulo p from power sums", "[bernoulli]") {
  CHECK(bernoulli_mod_p(4, 7).value() == 3);
  CHECK(bernoulli_mod_p(2, 5).value() == 1);
  CHECK(bernoulli_mod_p(2, 7).value() == 6);
  CHECK_THROWS(bernoulli_mod_p(3, 11));
  CHECK_THROWS(bernoulli_mod_p(10, 11));
}

TEST_CASE("power-sum route agrees with the exact recurrence", "[bernoulli][oracle]") {
  for (u64 p : primes_in_range(5, 200)) {
    for (u64 m = 2; m + 3 <= p; m += 2) REQUIRE(bernoulli_mod_p(m, p) == rational_reduce_mod(bernoulli_exact(m), p, 1));
  }
}

TEST_CASE("Fermat quotients", "[fermat]") {
  CHECK(fermat_quotient(2, 5, 1).value() == 3);
  CHECK(fermat_quotient(2, 5, 2).value() == 3);
  CHECK(fermat_quotient(1, 13, 3).value() == 0);
  CHECK(fermat_quotient_exact(2, 7) == 9);
  CHECK(fermat_quotient(2, 1093, 1).value() == 0);
  CHECK(fermat_quotient(2, 1093, 2).value() != 0);
}

TEST_CASE("Fermat quotient is additive in the argument", "[fermat][property]") {
  const auto primes = primes_in_range(5, 1000);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<i64> arg(1, 100000);
  int done = 0;
  while (done < 500) {
    const u64 p = primes[pick(rng)];
    const i64 x = arg(rng), y = arg(rng);
    if (x % static_cast<i64>(p) == 0 || y % static_cast<i64>(p) == 0) continue;
    REQUIRE(fermat_quotient(x * y, p, 1) == fermat_quotient(x, p, 1) + fermat_quotient(y, p, 1));
    ++done;
  }
}

TEST_CASE("4^(p-1) = 1 + 2pq + p^2 q^2", "[fermat]") {
  for (u64 p : primes_in_range(5, 400)) {
    const auto q = fermat_quotient(2, p, 3);
    const Residue pp(p, 3, p);
    REQUIRE(mod_pow(Residue(p, 3, 4), p - 1) == Residue(p, 3, 1) + Residue(p, 3, 2) * pp * q + pp * pp * q * q);
  }
}
