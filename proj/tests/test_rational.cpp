#include <doctest.h>

#include "galeforge/rational.hpp"

using galeforge::Integer;
using galeforge::Rational;
using galeforge::binomial;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational().str() == "0/1");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK((Rational(1, 2) - Rational(1, 2)).str() == "0/1");
  CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
  CHECK((Rational(1, 7) / Rational(2, 7)).str() == "1/2");
  CHECK(Rational(3, 5) == Rational(6, 10));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1).sign() == -1);
}

TEST_CASE("rational division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("rational parse is strict") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK(Rational::parse("0/1").is_zero());
  CHECK_THROWS_AS(Rational::parse("3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("2/4"), std::invalid_argument);   // not lowest terms
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);  // q must be positive
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("01/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(" 1/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("+1/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
}

TEST_CASE("parse round-trips str") {
  for (long n = -6; n <= 6; ++n) {
    for (long d = 1; d <= 5; ++d) {
      const Rational r(n, d);
      CHECK(Rational::parse(r.str()) == r);
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 2) == 1);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}
