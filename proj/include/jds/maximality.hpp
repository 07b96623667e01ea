#pragma once

// Extending J(n,m): the compatibility graph over all addable points, clique
// search on it, and the per-(n,m) classification report.

#include "jds/clique.hpp"
#include "jds/spectra.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace jds {

struct UniverseTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCap = 100000;
inline constexpr std::uint64_t kDefaultBudget = 100000000;

/// Canonical families passing is_addable, in enumeration order.
std::vector<CandidateFamily> addable_families(Parameters params);

struct CandidateUniverse {
  Parameters params;
  std::vector<CandidateFamily> families;
  std::vector<std::size_t> family_of;           // per vertex
  std::vector<std::vector<long long>> points;   // n * coordinates
  Graph graph;                                  // edge iff d^2 in {2, 4, ..., 2m}

  RationalPoint point(std::size_t v) const;
};

/// Materializes every addable family. Throws UniverseTooLarge when the
/// total exceeds `cap`. `workers` = 0 uses the JDS_WORKERS environment
/// variable, falling back to the hardware concurrency.
CandidateUniverse build_universe(Parameters params, std::size_t cap = kDefaultCap,
                                 unsigned workers = 0);

unsigned worker_count(unsigned requested);

struct FamilyReport {
  CandidateFamily family;
  BigInt size;
  Spectrum johnson_spectrum;
  Spectrum intra_spectrum;
};

struct FamilyPairReport {
  std::size_t a;
  std::size_t b;
  Spectrum spectrum;
  bool compatible;
};

enum class Resolution {
  johnson_maximal,   // no addable family
  orbit_complete,    // all families mutually compatible at orbit level
  clique_search,     // materialized universe, clique search
  orbit_incomplete,  // too large to materialize and not all compatible
};

std::string to_string(Resolution r);

struct KnownExtension {
  std::string description;
  std::vector<RationalPoint> points;  // includes J(n,m)
  bool verified = false;
};

struct ClassificationReport {
  Parameters params;
  BigInt johnson_size;
  std::vector<FamilyReport> families;
  std::vector<FamilyPairReport> pairs;  // a < b, plus a == b for intra checks
  BigInt universe_size;
  Resolution resolution = Resolution::johnson_maximal;
  BigInt added;
  bool optimal = true;  // added is proven maximum
  std::uint64_t expansions = 0;
  std::vector<RationalPoint> witness;  // added points, when materialized
  std::optional<std::set<std::size_t>> maximal_clique_sizes;
  std::optional<KnownExtension> known;
  std::vector<std::string> notes;

  BigInt total() const { return johnson_size + added; }
  std::string status() const;
};

struct ClassifyOptions {
  std::size_t cap = kDefaultCap;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 0;
  bool enumerate_maximal = false;  // also collect all maximal clique sizes
};

ClassificationReport classify(Parameters params, const ClassifyOptions &options = {});

struct VerifyResult {
  bool ok = false;
  bool duplicates = false;
  std::size_t points = 0;
  std::vector<QuadNum> spectrum;  // ascending, zero excluded
};

/// The points form a set with at most m distinct nonzero squared distances;
/// with johnson_normalized each must also be one of 2, 4, ..., 2m. Repeated
/// points fail the check.
VerifyResult verify_point_set(const std::vector<QuadPoint> &points, int m,
                              bool johnson_normalized = true);
VerifyResult verify_point_set(const std::vector<RationalPoint> &points, int m,
                              bool johnson_normalized = true);

/// Explicit maximal extensions for the two cases where the addable families
/// cannot all be used together: (9,3) and (9,4). nullopt elsewhere.
std::optional<KnownExtension> known_extension(Parameters params);

}  // namespace jds
