#pragma once

// Distance spectra between point orbits, computed from overlap profiles and
// contingency tables instead of materialized points.

#include "jds/families.hpp"

#include <stdexcept>
#include <vector>

namespace jds {

struct ParameterMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free, strictly positive squared distances.
struct Spectrum {
  std::vector<Rational> values;

  bool empty() const { return values.empty(); }
  Rational max() const { return values.back(); }
  /// Every value is one of 2, 4, ..., 2m.
  bool within_johnson_distances(int m) const;
  friend bool operator==(const Spectrum &, const Spectrum &) = default;
};

/// Builds a Spectrum from n^2-scaled integer squared distances; zero is dropped.
Spectrum spectrum_from_scaled(const std::vector<long long> &scaled, int n);

Spectrum johnson_family_spectrum(const CandidateFamily &fam);

/// Squared distances between a point of a and a point of b. Every
/// non-negative matrix with row sums k^a and column sums k^b is realized by
/// some pair, since coordinates permute freely. Zero (a point paired with
/// itself) is excluded.
Spectrum cross_family_spectrum(const CandidateFamily &a, const CandidateFamily &b);

/// Visits every non-negative integer matrix with the given margins, row-major.
void for_each_contingency_table(const std::vector<long long> &rows,
                                const std::vector<long long> &cols,
                                const std::function<void(const std::vector<long long> &)> &visit);

}  // namespace jds
