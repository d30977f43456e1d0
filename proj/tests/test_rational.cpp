#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "parstab/errors.hpp"
#include "parstab/rational.hpp"

using parstab::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(7, 3).den() == 3);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK(-a == Rational(-1, 6));
  CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);

  Rational s;
  for (int i = 0; i < 7; ++i) s += Rational(1, 7);
  CHECK(s == Rational(1));
}

TEST_CASE("floor and frac agree on both signs") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).frac() == Rational(1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).frac() == Rational(1, 2));
  CHECK(Rational(-3).floor() == -3);
  CHECK(Rational(-3).frac() == Rational(0));
  CHECK(Rational(5, 7).floor() == 0);

  // floor + frac reconstructs the value
  for (long long n = -12; n <= 12; ++n)
    for (long long d = 1; d <= 5; ++d) {
      Rational r(n, d);
      CHECK(Rational(r.floor()) + r.frac() == r);
      CHECK(r.frac() >= Rational(0));
      CHECK(r.frac() < Rational(1));
    }
}

TEST_CASE("ordering is the numeric order") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 6) <= Rational(1, 3));
  CHECK(Rational(7, 2) > Rational(3));
}

TEST_CASE("string round trips") {
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational(5).pretty() == "5");
  CHECK(Rational(1, 2).pretty() == "1/2");
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse(""), parstab::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), parstab::ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), parstab::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), parstab::ParseError);
}

TEST_CASE("overflow is detected, not wrapped") {
  long long big = std::numeric_limits<long long>::max();
  Rational huge(big, 1);
  CHECK_THROWS_AS(huge + huge, std::overflow_error);
  CHECK_THROWS_AS(huge * Rational(2), std::overflow_error);
}
