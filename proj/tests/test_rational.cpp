#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lsac/rational.hpp"

using lsac::Rational;

TEST_CASE("basic arithmetic stays in lowest terms") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) + Rational(0) == Rational(1, 2));
  CHECK(Rational(7, 3) + Rational(0) == Rational(7, 3));
  CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
  CHECK((-Rational(-5, 7)) == Rational(5, 7));
  CHECK(Rational(-6, -4) == Rational(3, 2));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(0).inverse(), lsac::DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), lsac::DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), lsac::DivisionByZero);
}

TEST_CASE("textual form") {
  CHECK(Rational(5, 6).str() == "5/6");
  CHECK(Rational(-5, 6).str() == "-5/6");
  CHECK(Rational(5, -6).str() == "-5/6");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("no overflow on large values") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000000007);
  Rational inv = big.inverse();
  CHECK(big * inv == Rational(1));
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  auto rand_q = [&]() { return Rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = rand_q(), b = rand_q(), c = rand_q();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}
