#include "jds/exactnum.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace jds {

namespace {

QuadNum::Radicand to_radicand(const BigInt &r) {
  if (!r.fits_ulong_p())
    throw std::overflow_error("radicand does not fit in 64 bits: " + r.get_str());
  return r.get_ui();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

QuadNum::Radicand smallest_prime_factor(QuadNum::Radicand r) {
  for (QuadNum::Radicand d = 2; d * d <= r; ++d)
    if (r % d == 0) return d;
  return r;
}

int exact_sign(const QuadNum &x);

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(long long num, long long den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational::Rational(const BigInt &num, const BigInt &den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty rational");
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    s = trim(s);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw ParseError("malformed integer '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9')
        throw ParseError("malformed integer '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ---------------------------------------------------------------- helpers

std::pair<BigInt, BigInt> square_split(const BigInt &n) {
  if (n < 0) throw NegativeRadicand("square_split of negative integer");
  if (n == 0) return {BigInt(0), BigInt(1)};
  BigInt rest = n;
  BigInt root = 1;
  BigInt free = 1;
  for (BigInt d = 2; d * d <= rest; ++d) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
      rest /= d;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= d;
    if (e % 2 == 1) free *= d;
  }
  free *= rest;
  return {root, free};
}

// ---------------------------------------------------------------- QuadNum

QuadNum::QuadNum(const Rational &r) {
  if (!r.is_zero()) terms_.emplace(1, r);
}

void QuadNum::add_term(Radicand r, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuadNum QuadNum::sqrt_term(const Rational &c, const BigInt &r) {
  if (r < 0) throw NegativeRadicand("sqrt of negative integer " + r.get_str());
  QuadNum out;
  if (r == 0 || c.is_zero()) return out;
  auto [root, free] = square_split(r);
  out.add_term(to_radicand(free), c * Rational(root));
  return out;
}

bool QuadNum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational QuadNum::to_rational() const {
  if (!is_rational()) throw std::domain_error("irrational value " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

QuadNum QuadNum::operator-() const {
  QuadNum out = *this;
  for (auto &[r, c] : out.terms_) c = -c;
  return out;
}

QuadNum &QuadNum::operator+=(const QuadNum &o) {
  for (const auto &[r, c] : o.terms_) add_term(r, c);
  return *this;
}

QuadNum &QuadNum::operator-=(const QuadNum &o) {
  for (const auto &[r, c] : o.terms_) add_term(r, -c);
  return *this;
}

QuadNum &QuadNum::operator*=(const QuadNum &o) {
  *this = quad_mul(*this, o);
  return *this;
}

QuadNum &QuadNum::operator/=(const Rational &r) {
  if (r.is_zero()) throw std::domain_error("division by zero");
  for (auto &[rad, c] : terms_) c /= r;
  return *this;
}

QuadNum operator*(const QuadNum &a, const QuadNum &b) {
  QuadNum out;
  for (const auto &[ra, ca] : a.terms_) {
    for (const auto &[rb, cb] : b.terms_) {
      // sqrt(ra) sqrt(rb) = g sqrt((ra/g)(rb/g)) for squarefree ra, rb
      const QuadNum::Radicand g = std::gcd(ra, rb);
      QuadNum::Radicand r = 0;
      if (__builtin_mul_overflow(ra / g, rb / g, &r))
        throw std::overflow_error("radicand product overflow");
      out.add_term(r, ca * cb * Rational(static_cast<long long>(g)));
    }
  }
  return out;
}

QuadNum quad_mul(const QuadNum &a, const QuadNum &b) { return a * b; }

mpf_class QuadNum::approx(unsigned bits) const {
  mpf_class sum(0, bits);
  for (const auto &[r, c] : terms_) {
    mpf_class coeff(c.raw(), bits);
    mpf_class root(static_cast<unsigned long>(r), bits);
    root = sqrt(root);
    sum += coeff * root;
  }
  return sum;
}

double QuadNum::to_double() const { return approx(128).get_d(); }

int QuadNum::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return terms_.begin()->second.sign();
  constexpr unsigned kBits = 200;
  mpf_class value(0, kBits);
  mpf_class magnitude(0, kBits);
  for (const auto &[r, c] : terms_) {
    mpf_class root(static_cast<unsigned long>(r), kBits);
    root = sqrt(root);
    mpf_class term(c.raw(), kBits);
    term *= root;
    value += term;
    magnitude += abs(term);
  }
  mpf_class slack(magnitude, kBits);
  mpf_div_2exp(slack.get_mpf_t(), slack.get_mpf_t(), 150);
  if (abs(value) > slack) return sgn(value);
  return exact_sign(*this);
}

namespace {

// Split x = u + v sqrt(p) with no radicand of u or v divisible by p, then
// compare u^2 against p v^2 when the signs of u and v disagree.
int exact_sign(const QuadNum &x) {
  if (x.is_zero()) return 0;
  if (x.terms().size() == 1) return x.terms().begin()->second.sign();
  QuadNum::Radicand pivot = 0;
  for (const auto &[r, c] : x.terms())
    if (r > 1) { pivot = r; break; }
  const QuadNum::Radicand p = smallest_prime_factor(pivot);
  QuadNum u;
  QuadNum v;
  for (const auto &[r, c] : x.terms()) {
    if (r % p == 0)
      v += QuadNum::sqrt_term(c, BigInt(static_cast<unsigned long>(r / p)));
    else
      u += QuadNum::sqrt_term(c, BigInt(static_cast<unsigned long>(r)));
  }
  const int su = exact_sign(u);
  const int sv = exact_sign(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  const QuadNum w = u * u - QuadNum(Rational(static_cast<long long>(p))) * v * v;
  const int sw = exact_sign(w);
  if (sw > 0) return su;
  if (sw < 0) return sv;
  return 0;
}

}  // namespace

std::strong_ordering compare(const QuadNum &a, const QuadNum &b) {
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string QuadNum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto &[r, c] : terms_) {
    if (!out.empty()) out += '+';
    out += c.to_string();
    if (r != 1) out += "*sqrt(" + std::to_string(r) + ")";
  }
  return out;
}

QuadNum QuadNum::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty number");
  QuadNum out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    // a '+' opening a term is a sign, not a separator
    while (plus != std::string_view::npos && plus == start) plus = text.find('+', plus + 1);
    const std::string_view term =
        trim(text.substr(start, plus == std::string_view::npos ? std::string_view::npos
                                                               : plus - start));
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    const auto sq = term.find("sqrt(");
    if (sq == std::string_view::npos) {
      out += QuadNum(Rational::parse(term));
    } else {
      if (term.back() != ')') throw ParseError("malformed term '" + std::string(term) + "'");
      Rational coeff(1);
      if (sq > 0) {
        std::string_view lead = trim(term.substr(0, sq));
        if (lead.empty() || lead.back() != '*')
          throw ParseError("malformed term '" + std::string(term) + "'");
        lead.remove_suffix(1);
        coeff = Rational::parse(lead);
      }
      const Rational rad = Rational::parse(term.substr(sq + 5, term.size() - sq - 6));
      if (!rad.is_integer()) throw ParseError("non-integer radicand in '" + std::string(term) + "'");
      out += sqrt_term(coeff, rad.numerator());
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

// ---------------------------------------------------------------- free ops

QuadNum sqrt_rational(const Rational &r) {
  if (r.sign() < 0) throw NegativeRadicand("sqrt of negative rational " + r.to_string());
  const BigInt p = r.numerator();
  const BigInt q = r.denominator();
  return QuadNum::sqrt_term(Rational(BigInt(1), q), p * q);
}

std::pair<QuadNum, QuadNum> solve_quadratic(const Rational &A, const Rational &B,
                                            const Rational &C) {
  if (A.is_zero()) throw std::invalid_argument("solve_quadratic: leading coefficient is zero");
  const Rational disc = B * B - Rational(4) * A * C;
  if (disc.sign() < 0)
    throw NegativeDiscriminant("negative discriminant " + disc.to_string());
  const QuadNum root = sqrt_rational(disc);
  const Rational twice_a = Rational(2) * A;
  return {(QuadNum(-B) - root) / twice_a, (QuadNum(-B) + root) / twice_a};
}

QuadPoint to_quad(const RationalPoint &p) {
  return QuadPoint(p.begin(), p.end());
}

QuadNum squared_distance(const QuadPoint &x, const QuadPoint &y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  QuadNum sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const QuadNum d = x[i] - y[i];
    sum += d * d;
  }
  return sum;
}

Rational squared_distance(const RationalPoint &x, const RationalPoint &y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  Rational sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Rational d = x[i] - y[i];
    sum += d * d;
  }
  return sum;
}

}  // namespace jds
