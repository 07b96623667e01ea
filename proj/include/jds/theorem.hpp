#pragma once

// Number-theoretic side of the non-maximality criterion.

#include "jds/families.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace jds {

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct Factorization {
  std::vector<std::pair<long long, int>> pairs;  // (prime, exponent), primes increasing

  long long product() const;
};

/// Trial division. Requires n >= 1.
Factorization factorize(long long n);

/// The special factor of n: odd primes contribute p^ceil(e/2), the prime 2
/// contributes 2^ceil((e+1)/2).
long long n0(long long n);

/// J(n,m) is not maximal iff n > n0 and 3 n0 - n0^2/n <= 4m, evaluated as
/// 3 n0 n - n0^2 <= 4 m n.
bool nonmaximal_predicate(long long n, long long m);

struct PropositionFamily {
  CandidateFamily family;
  bool condition_holds;  // 3 n0 n1 - (n0 n1)^2 / n <= 4m
};

/// The two-level extension family attached to c = n0 * n1; throws RangeError
/// unless 0 < c < n. The family is returned even when the condition fails.
PropositionFamily proposition_family(int n, int m, long long n1);

/// Offset of X0 predicted for c = n0 * n1: n - c, n - m or -c as m is below,
/// equal to or above c.
long long proposition_kbar(int n, int m, long long n1);

/// (2 floor(2(m+1)/3) - 1)^2
long long corollary_max_n(long long m);

/// (n0 | c, c (n - c) / n is an even integer). Requires 0 < c < n.
std::pair<bool, bool> parity_characterization(long long n, long long c);

}  // namespace jds
