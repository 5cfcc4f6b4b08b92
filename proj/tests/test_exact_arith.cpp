#include <random>

#include <catch_amalgamated.hpp>

#include "amhs/bigrational.hpp"
#include "amhs/rational_poly.hpp"

using namespace amhs;

TEST_CASE("binomial coefficients", "[exact]") {
  CHECK(binom_exact(4, 2) == 6);
  CHECK(binom_exact(10, 5) == 252);
  CHECK(binom_exact(4, 5) == 0);
  CHECK(binom_exact(4, -1) == 0);
  CHECK(binom_exact(0, 0) == 1);
  CHECK(binom_exact(60, 30).get_str() == "118264581564861424");
}

TEST_CASE("p-adic valuation of rationals", "[exact]") {
  CHECK(rational_padic_valuation(BigRational(250, 9), 5) == 3);
  CHECK(rational_padic_valuation(BigRational(-7, 12), 5) == 0);
  CHECK(rational_padic_valuation(BigRational(1, 6), 3) == -1);
  CHECK(integer_valuation(BigInt(3432), 7) == 0);
  CHECK_THROWS_AS(rational_padic_valuation(BigRational(0), 5), std::domain_error);
}

TEST_CASE("reduction of rationals modulo p^k", "[exact]") {
  CHECK(rational_reduce_mod(BigRational(-7, 12), 5, 3).value() == 114);
  CHECK(rational_reduce_mod(BigRational(0), 7, 2).value() == 0);
  CHECK(rational_reduce_mod(BigRational(-71, 288), 5, 1).value() == 3);
  CHECK(rational_reduce_mod(BigRational(3, 2), 5, 3).value() == 64);
  CHECK_THROWS_AS(rational_reduce_mod(BigRational(1, 10), 5, 2), std::domain_error);
}

TEST_CASE("rational arithmetic normalises", "[exact]") {
  const BigRational a(6, -8);
  CHECK(a.to_string() == "-3/4");
  CHECK(a.sign() == -1);
  CHECK((a + BigRational(3, 4)).is_zero());
  CHECK((a * BigRational(-4, 3)) == BigRational(1));
  CHECK(BigRational(7).to_string() == "7");
  CHECK(BigRational(1, 3) < BigRational(1, 2));
  CHECK_THROWS(a / BigRational(0));
  CHECK_THROWS(BigRational(BigInt(1), BigInt(0)));
}

TEST_CASE("rational field laws on random values", "[exact][property]") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 300; ++i) {
    const BigRational a(BigInt(num(rng)), BigInt(den(rng)));
    const BigRational b(BigInt(num(rng)), BigInt(den(rng)));
    const BigRational c(BigInt(num(rng)), BigInt(den(rng)));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rational polynomials", "[exact]") {
  const auto x = RationalPoly::x();
  const auto p = (x - RationalPoly(2)) * (x - RationalPoly(2)) - RationalPoly(2);
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(0) == 2);
  CHECK(p.coefficient(1) == -4);
  CHECK(p.coefficient(2) == 1);
  CHECK(p.evaluate(BigRational(4)) == 2);
  CHECK((p - p).degree() == -1);
  CHECK(p - p == RationalPoly());
  CHECK(RationalPoly::monomial(BigRational(1, 2), 3).coefficient(3) == BigRational(1, 2));
}
