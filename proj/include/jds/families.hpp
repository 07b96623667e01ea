#pragma once

// The Johnson representation J(n,m) as 0/1 vectors on the hyperplane
// sum x_i = m, and the permutation orbits that are the only candidates for
// extending it without introducing a new distance.
//
// A candidate family is written with an offset k0 and multiplicities
// k_1..k_l: coordinate value (2 - j) - k0/n occurs k_j times. All integer
// bookkeeping is done on n times the coordinate values ("scaled" values),
// which are integers.

#include "jds/exactnum.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace jds {

struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotReducible : std::logic_error {
  using std::logic_error::logic_error;
};

struct Parameters {
  int n = 0;
  int m = 0;

  Parameters() = default;
  /// Requires m >= 1 and n >= 2m.
  Parameters(int n_, int m_);

  friend bool operator==(const Parameters &, const Parameters &) = default;
};

BigInt binomial(long long n, long long k);

/// Overlap counts i_j between the support of a Johnson point and the level
/// classes of a family point.
struct IProfile {
  std::vector<long long> i;
  friend bool operator==(const IProfile &, const IProfile &) = default;
};

class CandidateFamily {
public:
  /// Validates the hyperplane condition (sum k_j = n, sum j k_j = 2n - k0 - m),
  /// non-negative multiplicities, and a level span of at most m. Leading or
  /// trailing zero multiplicities are kept as given.
  CandidateFamily(Parameters params, long long k0, std::vector<long long> k);

  /// Same as the constructor followed by canonicalized().
  static CandidateFamily canonical(Parameters params, long long k0, std::vector<long long> k);
  /// (1^m, 0^(n-m)) itself: k0 = 0, k = (m, n - m).
  static CandidateFamily johnson_pattern(Parameters params);

  /// Drops zero multiplicities at both ends; each dropped leading level adds
  /// n to k0 so the point set is unchanged.
  CandidateFamily canonicalized() const;
  bool is_canonical() const;
  bool is_johnson_pattern() const;

  const Parameters &params() const { return params_; }
  int n() const { return params_.n; }
  int m() const { return params_.m; }
  long long k0() const { return k0_; }
  const std::vector<long long> &k() const { return k_; }
  int l() const { return static_cast<int>(k_.size()); }

  /// n times the value of level j (1-based).
  long long scaled_level(int j) const { return static_cast<long long>(2 - j) * n() - k0_; }
  Rational level(int j) const { return Rational(scaled_level(j), n()); }
  std::vector<Rational> levels() const;

  long long square_sum() const;

  friend bool operator==(const CandidateFamily &, const CandidateFamily &) = default;

private:
  Parameters params_;
  long long k0_ = 0;
  std::vector<long long> k_;
};

// ---------------------------------------------------------------- points

/// Visits the binomial(n, m) Johnson points as 0/1 indicator vectors in
/// lexicographically decreasing order, starting from (1^m, 0^(n-m)).
void for_each_johnson_point(Parameters params,
                            const std::function<void(std::span<const int>)> &visit);
std::vector<RationalPoint> johnson_points(Parameters params);

/// Visits the distinct points of the orbit as scaled coordinates (n x).
void for_each_family_point(const CandidateFamily &fam,
                           const std::function<void(std::span<const long long>)> &visit);
std::vector<RationalPoint> family_points(const CandidateFamily &fam);

/// n! / prod k_j!
BigInt family_size(const CandidateFamily &fam);

// ---------------------------------------------------------------- enumeration

/// Visits every canonical family with 1 <= l <= m except the Johnson
/// pattern, ordered by l and then lexicographically by k. Returning false
/// from the visitor stops the walk.
void for_each_family(Parameters params, const std::function<bool(const CandidateFamily &)> &visit);
std::vector<CandidateFamily> enumerate_families(Parameters params);

// ---------------------------------------------------------------- distances

bool is_valid_profile(const CandidateFamily &fam, const IProfile &profile);

/// Visits all profiles with 0 <= i_j <= k_j and sum i_j = m.
void for_each_profile(const CandidateFamily &fam,
                      const std::function<void(const IProfile &)> &visit);

/// n^2 times the squared distance from a Johnson point to a family point with
/// the given overlap profile. Exact integer.
long long sq_dist_profile_scaled(const CandidateFamily &fam, const IProfile &profile);
Rational sq_dist_profile(const CandidateFamily &fam, const IProfile &profile);

/// 2 sum_j (j - 1) i_j
long long profile_weight(const IProfile &profile);

/// Greedy from the lowest level (largest j): maximizes profile_weight.
IProfile max_profile(const CandidateFamily &fam);

/// Largest squared distance between the Johnson set and the family.
Rational m_x(const CandidateFamily &fam);
/// n^2 * m_x
long long m_x_scaled(const CandidateFamily &fam);

/// m_x is an even integer at most 2m. The Johnson pattern itself is never
/// addable.
bool is_addable(const CandidateFamily &fam);

// ---------------------------------------------------------------- reduction

/// One reduction step without re-canonicalizing: for l > 3,
/// k1-1, k2+1, k_{l-1}+1, k_l-1; for l = 3, k1-1, k2+2, k3-1.
/// Requires a canonical family with l >= 3.
CandidateFamily reduce_raw(const CandidateFamily &fam);
/// reduce_raw followed by canonicalization.
CandidateFamily reduce(const CandidateFamily &fam);

struct ReductionTrace {
  std::vector<CandidateFamily> chain;  // canonical, from the input to X0
  long long kbar = 0;                  // offset of X0 as a two-level family
};

/// Reduces until l <= 2. kbar is the offset for which X0 has multiplicities
/// (kbar + m, n - kbar - m) with -m < kbar <= n - m.
ReductionTrace reduction_trace(const CandidateFamily &fam);

/// Drop of the maximal profile weight across one reduction step, measured
/// on the unshifted level indexing. Requires l >= 3.
long long ix_drop(const CandidateFamily &fam);
/// The closed-form case split for ix_drop: 0 when k1 <= n - m or k_l > m,
/// otherwise 2.
long long ix_drop_closed_form(const CandidateFamily &fam);

}  // namespace jds
