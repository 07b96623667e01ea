#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jds/exactnum.hpp"

#include <cmath>
#include <random>

using namespace jds;

namespace {

Rational random_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
  return Rational(num(rng), den(rng));
}

QuadNum random_quad(std::mt19937_64 &rng) {
  static const long radicands[] = {1, 2, 3, 5, 6, 7, 10, 15};
  std::uniform_int_distribution<int> pick(0, 7), count(1, 3);
  QuadNum q;
  for (int t = count(rng); t > 0; --t) q += QuadNum::sqrt_term(random_rational(rng), radicands[pick(rng)]);
  return q;
}

}  // namespace

TEST_CASE("rational canonical form and serialization") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).denominator() == 2);
  CHECK_THROWS(Rational(1, 0));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS((void)(Rational(1) / Rational(0)));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("quad_mul examples") {
  const QuadNum r5 = QuadNum::sqrt_term(1, 5);
  CHECK(quad_mul(r5, r5) == QuadNum(5));
  const QuadNum a = QuadNum(1) + QuadNum::sqrt_term(1, 2);
  const QuadNum b = QuadNum(1) - QuadNum::sqrt_term(1, 2);
  CHECK(quad_mul(a, b) == QuadNum(-1));
  CHECK(quad_mul(QuadNum::sqrt_term(1, 6), QuadNum::sqrt_term(1, 10)) == QuadNum::sqrt_term(2, 15));
}

TEST_CASE("radicands are normalized to squarefree") {
  CHECK(QuadNum::sqrt_term(1, 12) == QuadNum::sqrt_term(2, 3));
  CHECK(QuadNum::sqrt_term(3, 49) == QuadNum(21));
  CHECK(QuadNum::sqrt_term(0, 7).is_zero());
  CHECK_THROWS_AS(QuadNum::sqrt_term(1, -3), NegativeRadicand);
  const QuadNum sum = QuadNum::sqrt_term(1, 72) + QuadNum::sqrt_term(1, 50);
  for (const auto &[r, c] : sum.terms()) {
    CHECK(square_split(BigInt(static_cast<unsigned long>(r))).first == 1);
    CHECK(!c.is_zero());
  }
}

TEST_CASE("sqrt_rational examples") {
  CHECK(sqrt_rational(0).is_zero());
  const QuadNum s = sqrt_rational(Rational(9, 4));
  CHECK(s.is_rational());
  CHECK(s.to_rational() == Rational(3, 2));
  CHECK(sqrt_rational(Rational(21, 49)) == QuadNum::sqrt_term(Rational(1, 7), 21));
  CHECK_THROWS_AS(sqrt_rational(Rational(-1, 2)), NegativeRadicand);
}

TEST_CASE("solve_quadratic examples") {
  auto [lo, hi] = solve_quadratic(1, 0, -4);
  CHECK(lo == QuadNum(-2));
  CHECK(hi == QuadNum(2));

  // 20a^2 - 60a + 44 = 0; the displayed coordinate a - 1 is (5 -+ sqrt 5)/10.
  auto [r1, r2] = solve_quadratic(20, -60, 44);
  CHECK(r1 == QuadNum(Rational(3, 2)) - QuadNum::sqrt_term(Rational(1, 10), 5));
  CHECK(r2 == QuadNum(Rational(3, 2)) + QuadNum::sqrt_term(Rational(1, 10), 5));
  CHECK(r1 - QuadNum(1) == QuadNum(Rational(1, 2)) - QuadNum::sqrt_term(Rational(1, 10), 5));

  // k = n - 2 branch at n = 11: 110a^2 - 66a + 12 + 4 - 4 has negative discriminant.
  CHECK_THROWS_AS(solve_quadratic(110, -66, 12), NegativeDiscriminant);
  CHECK_THROWS_AS(solve_quadratic(0, 1, 1), std::invalid_argument);
}

TEST_CASE("roots satisfy their quadratic") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Rational A = random_rational(rng), B = random_rational(rng), C = random_rational(rng);
    if (A.is_zero() || B * B - Rational(4) * A * C < Rational(0)) continue;
    const auto [x, y] = solve_quadratic(A, B, C);
    for (const auto &r : {x, y}) CHECK((QuadNum(A) * r * r + QuadNum(B) * r + QuadNum(C)).is_zero());
    // first root is the minus-discriminant branch, so the order flips with the sign of A
    const auto order = compare(x, y);
    const bool branch_order =
        A.sign() > 0 ? order != std::strong_ordering::greater : order != std::strong_ordering::less;
    CHECK(branch_order);
  }
}

TEST_CASE("field axioms hold exactly") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a / a == Rational(1));

    const QuadNum x = random_quad(rng), y = random_quad(rng), z = random_quad(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("sqrt_rational squares back") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> num(0, 500), den(1, 200);
  for (int t = 0; t < 300; ++t) {
    const Rational r(num(rng), den(rng));
    const QuadNum s = sqrt_rational(r);
    CHECK(s * s == QuadNum(r));
    CHECK(s.sign() >= 0);
  }
}

TEST_CASE("float evaluation agrees with exact value") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const QuadNum x = random_quad(rng), y = random_quad(rng);
    const QuadNum p = x * y + x;
    const double expect = x.to_double() * y.to_double() + x.to_double();
    CHECK(p.to_double() == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("sign and ordering are exact near cancellation") {
  // sqrt 2 + sqrt 3 vs sqrt(5 + 2 sqrt 6): equal, and the difference of nearby values is tiny.
  const QuadNum s = QuadNum::sqrt_term(1, 2) + QuadNum::sqrt_term(1, 3);
  CHECK(s * s == QuadNum(5) + QuadNum::sqrt_term(2, 6));
  const QuadNum tiny = QuadNum::sqrt_term(1, 1000001) - QuadNum(1000);  // about 5e-4
  CHECK(tiny.sign() == 1);
  const QuadNum near = QuadNum::sqrt_term(Rational(1, 100000), 2) * QuadNum::sqrt_term(1, 3) -
                       QuadNum::sqrt_term(Rational(1, 100000), 6);
  CHECK(near.sign() == 0);
  CHECK(compare(QuadNum::sqrt_term(1, 2), Rational(141421356, 100000000)) == std::strong_ordering::greater);
  CHECK(compare(QuadNum::sqrt_term(-1, 7), QuadNum(0)) == std::strong_ordering::less);
}

TEST_CASE("QuadNum serialization round-trips") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const QuadNum x = random_quad(rng);
    CHECK(QuadNum::parse(x.to_string()) == x);
  }
  CHECK(QuadNum().to_string() == "0");
  CHECK(QuadNum(Rational(-2, 3)).to_string() == "-2/3");
  CHECK(QuadNum::parse("1/2+-1/10*sqrt(5)") == QuadNum(Rational(1, 2)) - QuadNum::sqrt_term(Rational(1, 10), 5));
  CHECK(QuadNum::parse("sqrt(8)") == QuadNum::sqrt_term(2, 2));
  CHECK_THROWS_AS(QuadNum::parse("1*sqrt(x)"), ParseError);
  CHECK(QuadNum(Rational(5, 7)).is_rational());
  CHECK(QuadNum(Rational(5, 7)).to_rational() == Rational(5, 7));
}

TEST_CASE("squared distance between points") {
  const QuadPoint x{QuadNum(1), QuadNum::sqrt_term(1, 2)};
  const QuadPoint y{QuadNum(0), QuadNum(0)};
  CHECK(squared_distance(x, y) == QuadNum(3));
  const RationalPoint p{Rational(1, 2), Rational(0)}, q{Rational(0), Rational(1, 2)};
  CHECK(squared_distance(p, q) == Rational(1, 2));
}
