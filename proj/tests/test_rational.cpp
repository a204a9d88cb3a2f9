#include <doctest.h>

#include "generators.hpp"
#include "patho/error.hpp"
#include "patho/rational.hpp"

using namespace patho;

TEST_CASE("arithmetic on fractions") {
  CHECK(rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::Add) == Rational(5, 6));
  CHECK(rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::Sub) == Rational(1, 6));
  CHECK(rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::Mul) == Rational(1, 6));
  CHECK(rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::Div) == Rational(3, 2));
  CHECK_THROWS_AS(rational_arith(Rational(1, 2), Rational(0), ArithOp::Div), DomainError);
}

TEST_CASE("stored reduced with positive denominator") {
  const Rational half(2, 4);
  CHECK(half.num() == 1);
  CHECK(half.den() == 2);
  const Rational neg(3, -6);
  CHECK(neg.num() == -1);
  CHECK(neg.den() == 2);
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("large common factors reduce") {
  // g * p / (g * d) with a huge g goes through the short-Euclid path
  const Integer g = ipow(3, 4000) - 1;
  const Rational x(g * 7, g * -12);
  CHECK(x == Rational(-7, 12));
  const Rational y(g * 5 + 1, g * 5);
  CHECK(y.den() == g * 5);
}

TEST_CASE("literal syntax") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("--1"), ParseError);
  CHECK_THROWS_AS(Rational::parse("0.5"), ParseError);
  CHECK(Rational::parse_decimal("0.01") == Rational(1, 100));
  CHECK(Rational::parse_decimal("-10") == Rational(-10));
  CHECK(Rational::parse_decimal("-.5") == Rational(-1, 2));
  CHECK(Rational::parse_decimal("3/4") == Rational(3, 4));
}

TEST_CASE("floor and fractional part") {
  CHECK(Rational(-1, 3).floor() == -1);
  CHECK(Rational(-1, 3).frac() == Rational(2, 3));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-4).frac() == Rational(0));
  CHECK(round_half_up(Rational(-7, 2)) == -3);
  CHECK(Rational::pow2(-3) == Rational(1, 8));
}

TEST_CASE("printed literals parse back to the same value") {
  testing::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational x = testing::random_rational(rng, 1'000'000'000, 1'000'000);
    CHECK(Rational::parse(x.str()) == x);
  }
}
