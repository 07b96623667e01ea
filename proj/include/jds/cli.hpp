#pragma once

#include "jds/maximality.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jds::cli {

enum class Format { text, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidSet = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
  std::string subcommand;
  long long n = 0;
  long long m = 0;
  std::optional<long long> n1;
  bool addable_only = false;
  bool enumerate_maximal = false;
  std::uint64_t budget = kDefaultBudget;
  std::size_t cap = kDefaultCap;
  Format format = Format::text;
  std::string output;  // empty: the stream passed to run()
  std::string input;   // point-set file for verify
};

/// Executes one subcommand, writing the report to `out` (or config.output).
/// Returns the process exit status.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, char **argv, std::ostream &out, std::ostream &err);

/// JSON array of arrays of number strings ("p/q" or QuadNum form).
std::vector<QuadPoint> read_point_set(const std::string &text);

}  // namespace jds::cli
