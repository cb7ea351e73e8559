#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kstab/error.hpp"
#include "kstab/polyfit.hpp"
#include "kstab/rational.hpp"

using namespace kstab;

TEST_CASE("rational normal form and printing") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational arithmetic") {
  const Rational a(1, 3), b(-1, 6);
  CHECK(a + b == Rational(1, 6));
  CHECK(a * b == Rational(-1, 18));
  CHECK(a / b == Rational(-2));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(factorial(5) == Rational(120));
  CHECK(b < a);
}

TEST_CASE("interpolation recovers a polynomial exactly") {
  const Polynomial p = {Rational(1, 2), Rational(3, 2), Rational(1)};
  std::vector<Sample> s;
  for (long k = 1; k <= 5; ++k) s.push_back({Rational(k), evaluate(p, Rational(k))});
  const auto fit = interpolate(s, 2);
  CHECK(fit == p);
  CHECK(fits_all(fit, s));
  s.back().y += Rational(1);
  CHECK_FALSE(fits_all(fit, s));
}

TEST_CASE("series division") {
  // (1 + t) / (1 - t) = 1 + 2t + 2t^2 + ...
  const std::vector<Rational> num = {Rational(1), Rational(1)}, den = {Rational(1), Rational(-1)};
  const auto q = series_divide(num, den, 4);
  REQUIRE(q.size() == 4);
  CHECK(q[0] == Rational(1));
  CHECK(q[1] == Rational(2));
  CHECK(q[3] == Rational(2));
}
