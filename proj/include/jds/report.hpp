#pragma once

// JSON, CSV and text renderings of results, and the reference tables the
// CLI checks its output against.

#include "jds/maximality.hpp"
#include "jds/subjohnson.hpp"
#include "jds/theorem.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jds {

using Json = nlohmann::ordered_json;

/// "((2/3)^7, (-1/3)^2)^P"; exponents of 1 are omitted.
std::string orbit_notation(const CandidateFamily &fam);

Json to_json(const CandidateFamily &fam);
Json to_json(const Spectrum &s);
Json to_json(const ClassificationReport &r);
Json to_json(const SubFamily &f);
Json to_json(const QuadPoint &p);
Json to_json(const RationalPoint &p);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json big_to_json(const BigInt &v);

// ---------------------------------------------------------------- tables

struct ExpectedTableRow {
  int n;
  long long added;
  long long total;
  bool conjectural;  // published maximum is a conjecture
};

/// Published rows for m = 2..5; empty for other m.
std::vector<ExpectedTableRow> expected_table(int m);

struct TableRow {
  ClassificationReport report;
  std::optional<ExpectedTableRow> expected;
  std::string check;  // PASS, FLAG
  std::string note;
};

/// Classifies every n in [2m, corollary_max_n(m)] with an addable family.
std::vector<TableRow> reproduce_table(int m, const ClassifyOptions &options);

Json to_json(const std::vector<TableRow> &rows, int m);
void write_table_text(std::ostream &os, const std::vector<TableRow> &rows, int m);
/// Columns n, m, family, added, total, status.
void write_table_csv(std::ostream &os, const std::vector<TableRow> &rows);

void write_classification_text(std::ostream &os, const ClassificationReport &r);
void write_classification_csv(std::ostream &os, const ClassificationReport &r);

// ---------------------------------------------------------------- sub-Johnson

struct ExpectedCombination {
  int n;
  std::vector<std::string> members;  // family names, e.g. {"X1+", "X4-"}
  std::size_t added;
  std::size_t bracket;  // published total
};

/// The published list of combinations, in order.
std::vector<ExpectedCombination> expected_combinations();

struct CombinationCheck {
  ExpectedCombination expected;
  bool found = false;  // the members form a valid combination
  bool maximal = false;
  std::size_t added = 0;
  std::size_t total = 0;
  bool verified = false;  // union passes verify_point_set with m = 2
  std::string check;      // PASS or FLAG
  std::string note;
};

std::vector<CombinationCheck> check_combinations(const CombinationSearch &cs);

Json to_json(const CombinationSearch &cs, const std::vector<CombinationCheck> &checks);
void write_sub2_text(std::ostream &os, const CombinationSearch &cs,
                     const std::vector<CombinationCheck> &checks);
void write_sub2_csv(std::ostream &os, const CombinationSearch &cs,
                    const std::vector<CombinationCheck> &checks);

}  // namespace jds
