#pragma once

// Exact scalars: arbitrary-precision rationals and elements of multiquadratic
// extensions Q(sqrt(r1), sqrt(r2), ...).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jds {

using BigInt = mpz_class;

struct NegativeRadicand : std::domain_error {
  using std::domain_error::domain_error;
};

struct NegativeDiscriminant : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision fraction kept in lowest terms with a positive
/// denominator.
class Rational {
public:
  Rational() = default;
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit on purpose
  Rational(const BigInt &v) : v_(v) {}                 // NOLINT
  Rational(long long num, long long den);
  Rational(const BigInt &num, const BigInt &den);

  static Rational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  const mpq_class &raw() const { return v_; }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

/// Squarefree decomposition n = s^2 * r with r squarefree. Returns (s, r).
std::pair<BigInt, BigInt> square_split(const BigInt &n);

/// Sum of rational multiples of square roots of distinct squarefree integers.
/// Radicand 1 carries the rational part.
class QuadNum {
public:
  using Radicand = std::uint64_t;
  using Terms = std::map<Radicand, Rational>;

  QuadNum() = default;
  QuadNum(const Rational &r);  // NOLINT: a rational is a QuadNum
  QuadNum(long long v) : QuadNum(Rational(v)) {}  // NOLINT

  /// c * sqrt(r) for any non-negative integer r; r is normalized.
  static QuadNum sqrt_term(const Rational &c, const BigInt &r);
  static QuadNum parse(std::string_view text);

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Throws std::domain_error when irrational terms are present.
  Rational to_rational() const;

  /// Exact sign. A 200-bit float evaluation decides when it is clearly away
  /// from zero; otherwise the sign is resolved by isolating one prime at a
  /// time and squaring.
  int sign() const;
  double to_double() const;
  mpf_class approx(unsigned bits = 256) const;

  /// "+"-joined terms "c*sqrt(r)", radicands ascending; "c" alone for r = 1.
  std::string to_string() const;

  QuadNum operator-() const;
  QuadNum &operator+=(const QuadNum &o);
  QuadNum &operator-=(const QuadNum &o);
  QuadNum &operator*=(const QuadNum &o);
  QuadNum &operator/=(const Rational &r);

  friend QuadNum operator+(QuadNum a, const QuadNum &b) { return a += b; }
  friend QuadNum operator-(QuadNum a, const QuadNum &b) { return a -= b; }
  friend QuadNum operator*(const QuadNum &a, const QuadNum &b);
  friend QuadNum operator/(QuadNum a, const Rational &r) { return a /= r; }

  friend bool operator==(const QuadNum &a, const QuadNum &b) = default;
  /// Exact real ordering (through sign()).
  friend std::strong_ordering compare(const QuadNum &a, const QuadNum &b);

private:
  void add_term(Radicand r, const Rational &c);
  Terms terms_;
};

QuadNum quad_mul(const QuadNum &a, const QuadNum &b);

/// Positive square root of r >= 0 written as (1/q) * sqrt(p q) for r = p/q.
QuadNum sqrt_rational(const Rational &r);

/// Both roots of A x^2 + B x + C = 0 ordered (-sqrt(disc), +sqrt(disc)).
std::pair<QuadNum, QuadNum> solve_quadratic(const Rational &A, const Rational &B,
                                            const Rational &C);

struct QuadLess {
  bool operator()(const QuadNum &a, const QuadNum &b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
};

using RationalPoint = std::vector<Rational>;
using QuadPoint = std::vector<QuadNum>;

QuadPoint to_quad(const RationalPoint &p);
QuadNum squared_distance(const QuadPoint &x, const QuadPoint &y);
Rational squared_distance(const RationalPoint &x, const RationalPoint &y);

}  // namespace jds
