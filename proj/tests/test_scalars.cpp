#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "scalar.hpp"

using namespace gtpa;

TEST_CASE("field degree detection") {
  CHECK(ScalarField::make(Rational(16))->degree == 1);   // r = 2
  CHECK(ScalarField::make(Rational(1))->degree == 1);    // r = 1
  CHECK(ScalarField::make(Rational(81, 16))->degree == 1);
  CHECK(ScalarField::make(Rational(4))->degree == 2);    // r = sqrt(2)
  CHECK(ScalarField::make(Rational(9, 4))->degree == 2);
  CHECK(ScalarField::make(Rational(2))->degree == 4);
  CHECK(ScalarField::make(Rational(2, 3))->degree == 4);
  CHECK(ScalarField::make(Rational(3))->degree == 4);
  CHECK_THROWS_AS(ScalarField::make(Rational(0)), error);
  CHECK_THROWS_AS(ScalarField::make(Rational(-2)), error);
}

TEST_CASE("canonical folding") {
  auto f = ScalarField::make(Rational(16));
  // r = 2, so 0 + 1*r folds to the rational 2.
  Scalar s(f, 0, 1);
  CHECK(s.is_rational());
  CHECK(s.rational_value() == 2);
  CHECK(s == Scalar(2));

  auto g = ScalarField::make(Rational(4));
  // r^2 = 2 rational, r itself is not.
  Scalar t(g, 1, 0, 3, 1);  // 1 + 3r^2 + r^3 = 7 + 2r
  CHECK(t == Scalar(g, 7, 2));
  CHECK_FALSE(t.is_rational());
}

TEST_CASE("ring identities") {
  auto f = ScalarField::make(Rational(2, 3));
  Scalar r = Scalar::r_pow(f, 1);
  CHECK(r * r * r * r == Scalar(Rational(2, 3)));
  CHECK(Scalar::r_pow(f, -1) * r == Scalar(1));
  CHECK(Scalar::r_pow(f, 7) == Scalar::r_pow(f, 3) * Scalar(Rational(2, 3)));
  CHECK(Scalar::r_pow(f, -3) * Scalar::r_pow(f, 3) == Scalar(1));

  Scalar a(f, Rational(1, 2), 2, 0, -1);
  Scalar b(f, 3, 0, Rational(5, 7), 0);
  CHECK((a + b) - b == a);
  CHECK(a * b == b * a);
  CHECK(a * (b + b) == a * b + a * b);
  CHECK(a * Scalar(1) == a);
  CHECK((a - a).is_zero());
}

TEST_CASE("inverses") {
  auto f = ScalarField::make(Rational(2, 3));
  Scalar a(f, Rational(1, 2), 2, 0, -1);
  CHECK(a * a.inverse() == Scalar(1));
  CHECK(Scalar(Rational(-7, 3)).inverse() == Scalar(Rational(-3, 7)));

  auto g = ScalarField::make(Rational(4));
  Scalar b(g, 1, 1);  // 1 + r, r = sqrt(2)
  CHECK(b * b.inverse() == Scalar(1));
  CHECK(b.inverse() == Scalar(g, -1, 1));  // 1/(1+sqrt2) = sqrt2 - 1

  CHECK_THROWS_AS(Scalar(0).inverse(), error);
  CHECK_THROWS_AS(Scalar(f, 0, 0, 0, 0).inverse(), error);
}

TEST_CASE("random arithmetic agrees with floating point") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(-6, 6);
  auto f = ScalarField::make(Rational(5, 2));
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a(f, d(rng), d(rng), d(rng), d(rng));
    Scalar b(f, d(rng), d(rng), d(rng), d(rng));
    CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) < 1e-9);
    CHECK(std::abs((a + b).to_double() - (a.to_double() + b.to_double())) < 1e-9);
    if (!a.is_zero())
      CHECK(std::abs((b / a).to_double() - b.to_double() / a.to_double()) < 1e-9);
  }
}

TEST_CASE("rendering") {
  auto f = ScalarField::make(Rational(2));
  CHECK(Scalar(0).text() == "0");
  CHECK(Scalar(Rational(3, 2)).text() == "3/2");
  CHECK(Scalar(f, 0, 1).text() == "r");
  CHECK(Scalar(f, 0, -1, 0, 2).text() == "-r + 2*r^3");
  CHECK(Scalar(f, Rational(-1, 2), 0, 1).text() == "-1/2 + r^2");
  auto cs = Scalar(f, Rational(-1, 2), 0, 1).coeff_strings();
  CHECK(cs[0] == "-1/2");
  CHECK(cs[1] == "0");
  CHECK(cs[2] == "1");
  CHECK(cs[3] == "0");
}

TEST_CASE("mixing pure rationals with field scalars") {
  auto f = ScalarField::make(Rational(3));
  Scalar r = Scalar::r_pow(f, 1);
  Scalar x = Scalar(2) + r;  // rational promoted into the field
  CHECK(x == Scalar(f, 2, 1));
  CHECK(Scalar(2) * r == Scalar(f, 0, 2));
  CHECK(Scalar(0) == Scalar(f, 0));
}

TEST_CASE("rational literal parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("12") == Rational(12));
  CHECK(parse_rational("0") == Rational(0));
  CHECK_THROWS_AS(parse_rational("3/0"), error);
  CHECK_THROWS_AS(parse_rational("a/b"), error);
  CHECK_THROWS_AS(parse_rational(""), error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), error);
}
