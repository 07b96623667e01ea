#include "jds/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace jds {

bool Spectrum::within_johnson_distances(int m) const {
  return std::all_of(values.begin(), values.end(), [m](const Rational &v) {
    if (!v.is_integer()) return false;
    const BigInt x = v.numerator();
    return x >= 2 && x <= 2 * m && x % 2 == 0;
  });
}

Spectrum spectrum_from_scaled(const std::vector<long long> &scaled, int n) {
  std::set<long long> distinct(scaled.begin(), scaled.end());
  distinct.erase(0);
  Spectrum s;
  const long long n2 = static_cast<long long>(n) * n;
  for (long long v : distinct) s.values.emplace_back(v, n2);
  return s;
}

Spectrum johnson_family_spectrum(const CandidateFamily &fam) {
  std::vector<long long> scaled;
  for_each_profile(fam, [&](const IProfile &p) { scaled.push_back(sq_dist_profile_scaled(fam, p)); });
  return spectrum_from_scaled(scaled, fam.n());
}

void for_each_contingency_table(const std::vector<long long> &rows,
                                const std::vector<long long> &cols,
                                const std::function<void(const std::vector<long long> &)> &visit) {
  const std::size_t r = rows.size();
  const std::size_t c = cols.size();
  if (std::accumulate(rows.begin(), rows.end(), 0LL) != std::accumulate(cols.begin(), cols.end(), 0LL))
    return;
  std::vector<long long> table(r * c, 0);
  std::vector<long long> col_left = cols;
  // Cell (u, v): the row remainder must fit into the capacity of the
  // columns after v.
  std::function<void(std::size_t, std::size_t, long long)> rec =
      [&](std::size_t u, std::size_t v, long long row_left) {
        if (u == r) {
          visit(table);
          return;
        }
        if (v + 1 == c) {
          if (row_left > col_left[v]) return;
          table[u * c + v] = row_left;
          col_left[v] -= row_left;
          rec(u + 1, 0, u + 1 < r ? rows[u + 1] : 0);
          col_left[v] += row_left;
          table[u * c + v] = 0;
          return;
        }
        long long later = 0;
        for (std::size_t w = v + 1; w < c; ++w) later += col_left[w];
        const long long lo = std::max(0LL, row_left - later);
        const long long hi = std::min(row_left, col_left[v]);
        for (long long x = lo; x <= hi; ++x) {
          table[u * c + v] = x;
          col_left[v] -= x;
          rec(u, v + 1, row_left - x);
          col_left[v] += x;
        }
        table[u * c + v] = 0;
      };
  if (r == 0 || c == 0) return;
  rec(0, 0, rows[0]);
}

Spectrum cross_family_spectrum(const CandidateFamily &a, const CandidateFamily &b) {
  if (!(a.params() == b.params())) throw ParameterMismatch("families belong to different (n, m)");
  const std::size_t la = a.k().size();
  const std::size_t lb = b.k().size();
  // n^2 (val_u - val_v)^2 for every level pair
  std::vector<long long> cell(la * lb);
  for (std::size_t u = 0; u < la; ++u)
    for (std::size_t v = 0; v < lb; ++v) {
      const long long d = a.scaled_level(static_cast<int>(u + 1)) - b.scaled_level(static_cast<int>(v + 1));
      cell[u * lb + v] = d * d;
    }
  std::vector<long long> scaled;
  for_each_contingency_table(a.k(), b.k(), [&](const std::vector<long long> &t) {
    long long s = 0;
    for (std::size_t x = 0; x < t.size(); ++x) s += t[x] * cell[x];
    scaled.push_back(s);
  });
  return spectrum_from_scaled(scaled, a.n());
}

}  // namespace jds
