#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "wallacs/exact.hpp"

using namespace wallacs;

TEST_CASE("bernoulli small values") {
  CHECK(bernoulli(1) == make_rational(1, 6));
  CHECK(bernoulli(2) == make_rational(1, 30));
  CHECK(bernoulli(3) == make_rational(1, 42));
  CHECK(bernoulli(4) == make_rational(1, 30));
  CHECK(bernoulli(5) == make_rational(5, 66));
  CHECK(bernoulli(6) == make_rational(691, 2730));
  CHECK(bernoulli(7) == make_rational(7, 6));
  CHECK(bernoulli(8) == make_rational(3617, 510));
}

TEST_CASE("bernoulli agrees with the Akiyama-Tanigawa oracle") {
  for (unsigned m = 1; m <= 20; ++m) CHECK(bernoulli(m) == testutil::bernoulli_oracle(m));
}

TEST_CASE("bernoulli denominators are square-free and even") {
  for (unsigned m = 1; m <= 20; ++m) {
    CAPTURE(m);
    Rational b = bernoulli(m);
    CHECK(b > 0);
    Int den = denominator_of(b);
    CHECK(den % 2 == 0);
    for (Int p = 2; p * p <= den; ++p) {
      CHECK(den % (p * p) != 0);
    }
  }
}

TEST_CASE("make_rational normalizes signs and reduces") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(denominator_of(make_rational(6, -4)) == 2);
  CHECK(numerator_of(make_rational(6, -4)) == -3);
  CHECK(make_rational(0, -7) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("to_string renders lowest terms") {
  CHECK(to_string(make_rational(45, 7)) == "45/7");
  CHECK(to_string(Rational(14)) == "14");
  CHECK(to_string(make_rational(-3, 9)) == "-1/3");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(make_rational(28, -4)) == "-7");
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(8, 0) == 1);
  CHECK(binomial(8, 8) == 1);
  CHECK_THROWS_AS(binomial(3, 5), std::domain_error);
  // Pascal identity on a grid
  for (unsigned t = 1; t <= 16; ++t)
    for (unsigned s = 1; s <= t; ++s)
      CHECK(binomial(t, s) == binomial(t - 1, s - 1) + (s < t ? binomial(t - 1, s) : Int(0)));
}

TEST_CASE("two-adic valuation examples") {
  CHECK(two_adic_valuation(Rational(8)) == 3);
  CHECK(two_adic_valuation(Rational(-8)) == 3);
  CHECK(two_adic_valuation(make_rational(1, 6)) == -1);
  CHECK(two_adic_valuation(make_rational(7, 8)) == -3);
  CHECK(two_adic_valuation(make_rational(12, 5)) == 2);
  CHECK(two_adic_valuation(Rational(9)) == 0);
  CHECK_THROWS_AS(two_adic_valuation(Rational(0)), std::domain_error);
}

TEST_CASE("odd unit scaling preserves valuation") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-400, 400), den(1, 300), odd(-150, 150);
  for (int t = 0; t < 500; ++t) {
    Rational q = make_rational(num(rng), den(rng));
    if (q == 0) continue;
    int d = 2 * odd(rng) + 1;
    CHECK(two_adic_valuation(q) == two_adic_valuation(q * d));
  }
}

TEST_CASE("mod2 of 2-adic integers") {
  CHECK(mod2_of_2adic_integer(make_rational(9, 5)) == 1);
  CHECK(mod2_of_2adic_integer(make_rational(4, 7)) == 0);
  CHECK(mod2_of_2adic_integer(Rational(0)) == 0);
  CHECK(is_two_adic_integer(Rational(0)));
  CHECK_FALSE(is_two_adic_integer(make_rational(1, 2)));
  CHECK_THROWS_AS(mod2_of_2adic_integer(make_rational(1, 2)), std::domain_error);
}

TEST_CASE("mod2 is invariant under adding twice a 2-adic integer") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> num(-300, 300), oddden(0, 60);
  for (int t = 0; t < 500; ++t) {
    Rational q = make_rational(num(rng), 2 * oddden(rng) + 1);
    Rational r = make_rational(num(rng), 2 * oddden(rng) + 1);
    CHECK(mod2_of_2adic_integer(q + 2 * r) == mod2_of_2adic_integer(q));
  }
}

TEST_CASE("rational arithmetic round-trips") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
  for (int t = 0; t < 500; ++t) {
    Rational a = make_rational(num(rng), den(rng));
    Rational b = make_rational(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a * b) / b == a);
  }
}

TEST_CASE("floor and ceil division, nonnegative mod") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(floor_div(8, 2) == 4);
  CHECK(ceil_div(8, 2) == 4);
  CHECK(mod_nonneg(-7, 2) == 1);
  CHECK(mod_nonneg(-8, 3) == 1);
  CHECK(mod_nonneg(7, 3) == 1);
  std::mt19937 rng(14);
  std::uniform_int_distribution<int> num(-500, 500), den(1, 60);
  for (int t = 0; t < 300; ++t) {
    Int a(num(rng)), b(den(rng));
    CHECK(b * floor_div(a, b) <= a);
    CHECK(b * (floor_div(a, b) + 1) > a);
    CHECK(b * ceil_div(a, b) >= a);
    CHECK(b * (ceil_div(a, b) - 1) < a);
    Int m = mod_nonneg(a, b);
    CHECK(m >= 0);
    CHECK(m < b);
    CHECK((a - m) % b == 0);
  }
}

TEST_CASE("is_integer") {
  CHECK(is_integer(Rational(5)));
  CHECK(is_integer(make_rational(28, 4)));
  CHECK_FALSE(is_integer(make_rational(1, 3)));
}
