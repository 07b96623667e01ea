#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jds/spectra.hpp"
#include "oracle.hpp"

using namespace jds;

namespace {

CandidateFamily fam(int n, int m, long long k0, std::vector<long long> k) {
  return CandidateFamily::canonical(Parameters(n, m), k0, std::move(k));
}

Spectrum of(std::initializer_list<long long> v) {
  Spectrum s;
  for (auto x : v) s.values.emplace_back(x);
  return s;
}

Spectrum to_spectrum(const std::set<long long> &scaled, int n) {
  return spectrum_from_scaled(std::vector<long long>(scaled.begin(), scaled.end()), n);
}

}  // namespace

TEST_CASE("johnson_family_spectrum examples") {
  CHECK(johnson_family_spectrum(fam(9, 2, 6, {8, 1})) == of({2, 4}));
  CHECK(johnson_family_spectrum(fam(9, 2, 3, {5, 4})) == of({2, 4, 6}));
  const Spectrum s = johnson_family_spectrum(fam(49, 5, 42, {47, 2}));
  CHECK(s.within_johnson_distances(5));
  CHECK(!of({2, 4, 6}).within_johnson_distances(2));
}

TEST_CASE("cross_family_spectrum examples") {
  // two distinct points of ((1/3)^8, -2/3) differ by one transposition
  const auto x = fam(9, 2, 6, {8, 1});
  CHECK(cross_family_spectrum(x, x) == of({2}));
  CHECK(cross_family_spectrum(fam(9, 3, 6, {9}), fam(9, 3, -3, {1, 7, 1})) == of({2}));
  const auto y = fam(8, 3, 4, {7, 1});
  CHECK(cross_family_spectrum(y, y) == of({2}));
  CHECK(cross_family_spectrum(fam(9, 3, 6, {9}), fam(9, 3, 6, {9})).empty());
  CHECK_THROWS_AS(cross_family_spectrum(x, fam(9, 3, 6, {9})), ParameterMismatch);
}

TEST_CASE("contingency tables respect margins") {
  std::size_t count = 0;
  for_each_contingency_table({2, 1}, {1, 1, 1}, [&](const std::vector<long long> &t) {
    REQUIRE(t.size() == 6);
    CHECK(t[0] + t[1] + t[2] == 2);
    CHECK(t[3] + t[4] + t[5] == 1);
    for (int c = 0; c < 3; ++c) CHECK(t[c] + t[3 + c] == 1);
    ++count;
  });
  CHECK(count == 3);
}

TEST_CASE("spectrum max equals M_X") {
  for (int n = 4; n <= 16; ++n)
    for (int m = 1; 2 * m <= n; ++m)
      for (const auto &f : enumerate_families(Parameters(n, m)))
        CHECK(johnson_family_spectrum(f).max() == m_x(f));
}

TEST_CASE("spectra agree with brute force for n <= 10") {
  for (int n = 4; n <= 10; ++n)
    for (int m = 1; 2 * m <= n; ++m) {
      const auto jp = oracle::johnson(n, m);
      auto families = enumerate_families(Parameters(n, m));
      std::vector<std::vector<oracle::Point>> pts;
      for (const auto &f : families) pts.push_back(family_size(f) <= 400 ? oracle::family(f) : std::vector<oracle::Point>{});
      for (std::size_t a = 0; a < families.size(); ++a) {
        if (pts[a].empty()) continue;
        CHECK(johnson_family_spectrum(families[a]) == to_spectrum(oracle::spectrum(jp, pts[a]), n));
        for (std::size_t b = a; b < families.size() && b < a + 6; ++b) {
          if (pts[b].empty()) continue;
          const Spectrum s = cross_family_spectrum(families[a], families[b]);
          CHECK(s == to_spectrum(oracle::spectrum(pts[a], pts[b]), n));
          CHECK(s == cross_family_spectrum(families[b], families[a]));
        }
      }
    }
}
