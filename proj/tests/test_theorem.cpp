#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jds/report.hpp"
#include "jds/theorem.hpp"

using namespace jds;

namespace {

bool some_family_addable(int n, int m) {
  bool found = false;
  for_each_family(Parameters(n, m), [&](const CandidateFamily &f) {
    found = is_addable(f);
    return !found;
  });
  return found;
}

// Smallest s with n | s^2, and 2n | s^2 when n is even.
long long n0_by_search(long long n) {
  const long long need = n % 2 == 0 ? 2 * n : n;
  for (long long s = 1;; ++s)
    if ((s * s) % need == 0) return s;
}

}  // namespace

TEST_CASE("factorize") {
  const auto f = factorize(360);
  CHECK(f.pairs == std::vector<std::pair<long long, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(f.product() == 360);
  CHECK(factorize(1).pairs.empty());
  CHECK(factorize(97).pairs == std::vector<std::pair<long long, int>>{{97, 1}});
  for (long long n = 1; n <= 2000; ++n) CHECK(factorize(n).product() == n);
}

TEST_CASE("n0 examples") {
  CHECK(n0(9) == 3);
  CHECK(n0(8) == 4);
  CHECK(n0(1) == 1);
  CHECK(n0(18) == 6);
  CHECK(n0(50) == 10);
}

TEST_CASE("n0 matches a direct search") {
  for (long long n = 1; n <= 1000; ++n) CHECK(n0(n) == n0_by_search(n));
}

TEST_CASE("nonmaximal_predicate examples") {
  CHECK(nonmaximal_predicate(9, 2));
  CHECK(!nonmaximal_predicate(8, 2));
  CHECK(nonmaximal_predicate(49, 5));
  CHECK(!nonmaximal_predicate(50, 5));
  CHECK_THROWS(nonmaximal_predicate(5, 3));
  CHECK_THROWS(nonmaximal_predicate(4, 1));
}

TEST_CASE("predicate agrees with family enumeration") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2 * m; n <= 60; ++n)
      CHECK_MESSAGE(nonmaximal_predicate(n, m) == some_family_addable(n, m), "n=" << n << " m=" << m);
}

TEST_CASE("proposition_family examples") {
  CHECK(orbit_notation(proposition_family(9, 2, 1).family) == "((1/3)^8, -2/3)^P");
  CHECK(orbit_notation(proposition_family(9, 3, 1).family) == "((1/3)^9)");
  CHECK(orbit_notation(proposition_family(9, 4, 2).family) == "((2/3)^7, (-1/3)^2)^P");
  CHECK(orbit_notation(proposition_family(8, 3, 1).family) == "((1/2)^7, -1/2)^P");
  CHECK_THROWS_AS(proposition_family(9, 2, 3), RangeError);
  CHECK_THROWS_AS(proposition_family(9, 2, 0), RangeError);
}

TEST_CASE("proposition families lie on the hyperplane and are addable when the condition holds") {
  for (int m = 2; m <= 6; ++m)
    for (int n = 2 * m; n <= 80; ++n) {
      const long long s = n0(n);
      for (long long n1 = 1; s * n1 < n; ++n1) {
        const auto p = proposition_family(n, m, n1);
        long long total = 0, weighted = 0;
        for (int j = 1; j <= p.family.l(); ++j) {
          total += p.family.k()[j - 1];
          weighted += j * p.family.k()[j - 1];
        }
        CHECK(total == n);
        CHECK(weighted == 2LL * n - p.family.k0() - m);
        if (p.condition_holds) CHECK(is_addable(p.family));
        CHECK(proposition_kbar(n, m, n1) == reduction_trace(p.family).kbar);
      }
    }
}

TEST_CASE("condition grows with n1") {
  for (long long n = 2; n <= 200; ++n) {
    const long long s = n0(n);
    for (long long n1 = 1; s * (n1 + 1) < n; ++n1) {
      // 3 s n1 - s^2 n1^2 / n, times n
      const long long lhs = 3 * s * n1 * n - s * s * n1 * n1;
      const long long rhs = 3 * s * (n1 + 1) * n - s * s * (n1 + 1) * (n1 + 1);
      CHECK(lhs < rhs);
    }
  }
}

TEST_CASE("corollary_max_n") {
  const long long expected[] = {9, 9, 25, 49, 49, 81, 121};
  for (long long m = 2; m <= 8; ++m) {
    const long long cf = corollary_max_n(m);
    CHECK(cf == expected[m - 2]);
    long long best = 0;
    for (long long n = 2 * m; n <= cf + 50; ++n)
      if (nonmaximal_predicate(n, m)) best = n;
    CHECK(best == cf);
  }
}

TEST_CASE("parity_characterization") {
  CHECK(parity_characterization(9, 3) == std::pair{true, true});
  CHECK(parity_characterization(9, 1) == std::pair{false, false});
  CHECK(parity_characterization(8, 4) == std::pair{true, true});
  for (long long n = 2; n <= 300; ++n)
    for (long long c = 1; c < n; ++c) {
      const auto [a, b] = parity_characterization(n, c);
      CHECK(a == b);
      CHECK(a == (((n - c) * c) % n == 0 && (((n - c) * c) / n) % 2 == 0));
    }
}
