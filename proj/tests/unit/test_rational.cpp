#include "doctest.h"

#include <unordered_set>

#include "pf/errors.hpp"
#include "pf/rational.hpp"

using pf::Rational;

TEST_CASE("normalized form") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, -7).str() == "0");
  CHECK(Rational(10, 5).is_integer());
  CHECK(Rational(10, 5).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), pf::DomainError);
}

TEST_CASE("parse accepts integers, fractions and decimals") {
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK(Rational::parse("-0.125") == Rational(-1, 8));
  CHECK(Rational::parse("010") == Rational(10));
  CHECK(Rational::parse("007/014") == Rational(1, 2));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("0.0") == Rational(0));
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  for (const char* bad : {"", "x", "1/0", "1//2", "1.2.3", "/3", "3/", "- 1"})
    CHECK_THROWS_AS(Rational::parse(bad), pf::ParseError);
}

TEST_CASE("str and parse round trip") {
  for (int p = -20; p <= 20; ++p)
    for (int q = 1; q <= 12; ++q) {
      Rational r(p, q);
      CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("exact arithmetic and ordering") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a > b);
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK_THROWS_AS(a / Rational(0), pf::DomainError);
}

TEST_CASE("undefined marker") {
  Rational u = Rational::undefined();
  CHECK_FALSE(u.defined());
  CHECK(u == Rational::undefined());
  CHECK(u != Rational(0));
  CHECK(u.str() == "undefined");
  CHECK_THROWS((void)(u < Rational(1)));
}

TEST_CASE("hash agrees with equality") {
  std::unordered_set<Rational, pf::RationalHash> set;
  set.insert(Rational(2, 4));
  set.insert(Rational(1, 2));
  set.insert(Rational::parse("0.5"));
  CHECK(set.size() == 1);
}
