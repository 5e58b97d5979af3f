#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finsurg/numtheory.hpp"
#include "finsurg/rational.hpp"

#include <numeric>

using namespace finsurg;

TEST_CASE("Rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK((Rational(1, 2) + Rational(1, 2)).is_integer());
  CHECK(Rational(1, 3) * Rational(3) == Rational(1));
  CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5, 4).abs() == Rational(5, 4));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("Rational floor and fractional part") {
  CHECK(Rational(7, 2).floor_int() == 3);
  CHECK(Rational(-7, 2).floor_int() == -4);
  CHECK(Rational(-4, 2).floor_int() == -2);
  CHECK(Rational(7, 2).frac() == Rational(1, 2));
  CHECK(Rational(-7, 2).frac() == Rational(1, 2));
  CHECK(Rational(5).frac() == Rational(0));
}

TEST_CASE("Rational string form") {
  CHECK(Rational(-5, 4).str() == "-5/4");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational::parse("-5/4") == Rational(-5, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse(Rational(22, -8).str()) == Rational(-11, 4));
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
}

TEST_CASE("floor_div and mod_floor") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-8, 2) == -4);
  CHECK(mod_floor(-1, 5) == 4);
  CHECK(mod_floor(12, 5) == 2);
  CHECK(mod_floor(-10, 5) == 0);
}

TEST_CASE("sawtooth") {
  CHECK(sawtooth(Rational(3)) == Rational(0));
  CHECK(sawtooth(Rational(1, 4)) == Rational(-1, 4));
  CHECK(sawtooth(Rational(1, 2)) == Rational(0));
  CHECK(sawtooth(Rational(-1, 4)) == Rational(1, 4));
  CHECK(sawtooth(Rational(4, 3)) == Rational(-1, 6));
}

TEST_CASE("dedekind_sum examples") {
  CHECK(dedekind_sum(1, 1) == Rational(0));
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(2, 3) == Rational(-1, 18));
  CHECK(dedekind_sum(4, 5) == Rational(-1, 5));
  CHECK_THROWS_AS(dedekind_sum(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(dedekind_sum(1, -3), std::invalid_argument);
}

TEST_CASE("dedekind_sum matches the definition evaluated with sawtooth") {
  // Independent route: assemble the sum from sawtooth values directly.
  for (long long q = 1; q <= 40; ++q)
    for (long long p = -10; p <= 10; ++p) {
      Rational direct(0);
      for (long long i = 1; i < q; ++i)
        direct += sawtooth(Rational(i, q)) * sawtooth(Rational(p * i, q));
      CHECK(dedekind_sum(p, q) == direct);
    }
}

TEST_CASE("reciprocity examples") {
  CHECK(reciprocity_rhs(1, 1) == Rational(0));
  CHECK(dedekind_sum(1, 1) + dedekind_sum(1, 1) == reciprocity_rhs(1, 1));
  CHECK(reciprocity_rhs(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(1, 3) + dedekind_sum(3, 1) == reciprocity_rhs(1, 3));
  CHECK(reciprocity_rhs(2, 3) == Rational(-1, 18));
  CHECK(dedekind_sum(2, 3) + dedekind_sum(3, 2) == reciprocity_rhs(2, 3));
  CHECK_THROWS_AS(reciprocity_rhs(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(reciprocity_rhs(0, 1), std::invalid_argument);
}

TEST_CASE("reciprocity holds for coprime pairs up to 60") {
  for (long long b = 1; b <= 60; ++b)
    for (long long a = 1; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(dedekind_sum(a, b) + dedekind_sum(b, a) == reciprocity_rhs(a, b));
    }
}

TEST_CASE("dedekind_sum oddness and periodicity") {
  for (long long q = 1; q <= 50; ++q)
    for (long long p = -2 * q; p <= 2 * q; ++p) {
      CHECK(dedekind_sum(-p, q) == -dedekind_sum(p, q));
      CHECK(dedekind_sum(p, q) == dedekind_sum(mod_floor(p, q), q));
    }
}

TEST_CASE("vanishing identity s(n, n-m) + s(-m, n-m) = 0") {
  for (long long m = 1; m <= 8; ++m)
    for (long long n = m + 1; n <= 80; ++n) {
      if (std::gcd(2 * m, n) != 1) continue;
      CHECK(dedekind_sum(n, n - m) + dedekind_sum(-m, n - m) == Rational(0));
    }
}

TEST_CASE("mod_inverse examples") {
  CHECK(mod_inverse(1, 1) == 1);
  CHECK(mod_inverse(1, 7) == 1);
  CHECK(mod_inverse(4, 5) == 4);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(-1, 5) == 4);  // (-1)(4) = -4 ≡ 1 (mod 5)
  CHECK_THROWS_AS(mod_inverse(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(mod_inverse(3, 0), std::invalid_argument);
}

TEST_CASE("mod_inverse is a two-sided inverse for all coprime pairs up to 10^4") {
  long long bad = 0;
  for (long long a = 1; a <= 10000; ++a)
    for (long long w = 1; w <= a; ++w) {
      if (std::gcd(w, a) != 1) continue;
      long long inv = mod_inverse(w, a);
      if (inv <= 0 || inv > a || mod_floor(w * inv - 1, a) != 0) ++bad;
    }
  CHECK(bad == 0);
}
