#pragma once

// Two-distance extensions of J(n-1, 2) placed in R^n with a fixed last
// coordinate: points (1^2, 0^(n-3), 0) permuted over the first n-1 slots.
// Every candidate orbit has the shape (a^k, (a-1)^(n-k-1), b) with
// b = -(n-1) a + (n-k+1), again permuted over the first n-1 slots.

#include "jds/exactnum.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace jds {

enum class Sign { plus, minus };

struct SubFamily {
  int n = 0;
  int k = 0;
  int index = 0;  // 1..4: k = 0 at distance 2, k = 0 at distance 4, k = 1, k = n - 2
  Sign sign = Sign::plus;
  bool self_mirror = false;  // both roots coincide (X4 at n = 10)
  QuadNum a;
  QuadNum b;

  std::string name() const;     // e.g. "X4-"
  std::size_t orbit_size() const;
  std::vector<QuadPoint> points() const;
  friend bool operator==(const SubFamily &, const SubFamily &) = default;
};

/// binomial(n-1, 2) points of dimension n; requires n >= 5.
std::vector<QuadPoint> sub_johnson_points(int n);

/// n(n-1)a^2 - 2n(n-k+1)a + (n-k+1)(n-k+2) + 2 i2
QuadNum sub_sq_dist(int n, int k, const QuadNum &a, int i2);

/// Feasible i2 range {max(0, 2-k), ..., min(2, n-k-1)}.
std::pair<int, int> i2_range(int n, int k);

/// All orbits whose every distance to J(n-1,2) is 2 or 4, found by solving
/// the distance quadratic for each k in 0..n-2 and each admissible target.
/// Ordered by index, then + before -.
std::vector<SubFamily> solve_sub_families(int n);

struct Combination {
  std::vector<std::size_t> members;  // indices into CombinationSearch::families
  std::size_t added = 0;
  std::size_t total = 0;
  bool maximal = false;  // no valid strict superset

  std::string label(const std::vector<SubFamily> &families) const;
};

struct CombinationSearch {
  int n = 0;
  std::size_t johnson_size = 0;
  std::vector<SubFamily> families;
  std::vector<std::vector<bool>> compatible;  // pairwise, diagonal = intra-family
  std::vector<Combination> valid;             // every valid non-empty subset
};

/// Every subset of the families whose union with J(n-1,2) keeps all squared
/// distances in {2, 4}.
CombinationSearch combination_search(int n);

/// The subset with every member's sign flipped (a self-mirror family maps
/// to itself). Empty when some mirror is missing.
std::vector<std::size_t> mirror_members(const std::vector<SubFamily> &families,
                                        const std::vector<std::size_t> &members);

/// J(n-1,2) together with the orbits of the given families.
std::vector<QuadPoint> union_points(int n, const std::vector<SubFamily> &families,
                                    const std::vector<std::size_t> &members);

/// Distance-preserving bijection between two point sets, found by
/// backtracking over exact squared-distance matrices.
bool congruent(const std::vector<QuadPoint> &a, const std::vector<QuadPoint> &b);

}  // namespace jds
