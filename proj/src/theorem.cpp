#include "jds/theorem.hpp"

#include <string>

namespace jds {

long long Factorization::product() const {
  long long out = 1;
  for (const auto &[p, e] : pairs)
    for (int i = 0; i < e; ++i) out *= p;
  return out;
}

Factorization factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize needs n >= 1");
  Factorization f;
  for (long long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.pairs.emplace_back(p, e);
  }
  if (n > 1) f.pairs.emplace_back(n, 1);
  return f;
}

long long n0(long long n) {
  long long out = 1;
  for (const auto &[p, e] : factorize(n).pairs) {
    const int power = (p == 2) ? (e + 2) / 2 : (e + 1) / 2;
    for (int i = 0; i < power; ++i) out *= p;
  }
  return out;
}

bool nonmaximal_predicate(long long n, long long m) {
  if (m < 2 || n < 2 * m) throw std::invalid_argument("predicate needs n >= 2m >= 4");
  const long long s = n0(n);
  return n > s && 3 * s * n - s * s <= 4 * m * n;
}

PropositionFamily proposition_family(int n, int m, long long n1) {
  const long long c = n0(n) * n1;
  if (n1 <= 0 || c >= n)
    throw RangeError("need 0 < n0*n1 < n, got n0*n1=" + std::to_string(c) + " n=" + std::to_string(n));
  const Parameters params(n, m);
  const bool holds = 3 * c * n - c * c <= 4LL * m * n;
  if (m < c) {
    // ((c/n)^(n-c+m), (-1+c/n)^(c-m)): top level 1 - k0/n = c/n
    return {CandidateFamily::canonical(params, n - c, {n - c + m, c - m}), holds};
  }
  if (m == c) return {CandidateFamily::canonical(params, n - m, {n}), holds};
  // ((1+c/n)^(m-c), (c/n)^(n+c-m))
  return {CandidateFamily::canonical(params, -c, {m - c, n + c - m}), holds};
}

long long proposition_kbar(int n, int m, long long n1) {
  const long long c = n0(n) * n1;
  if (m < c) return n - c;
  if (m == c) return n - m;
  return -c;
}

long long corollary_max_n(long long m) {
  if (m < 2) throw std::invalid_argument("corollary needs m >= 2");
  const long long root = 2 * ((2 * (m + 1)) / 3) - 1;
  return root * root;
}

std::pair<bool, bool> parity_characterization(long long n, long long c) {
  if (n < 2 || c <= 0 || c >= n) throw std::invalid_argument("need 0 < c < n");
  const bool divides = c % n0(n) == 0;
  const long long prod = c * (n - c);
  const bool even = prod % n == 0 && (prod / n) % 2 == 0;
  return {divides, even};
}

}  // namespace jds
