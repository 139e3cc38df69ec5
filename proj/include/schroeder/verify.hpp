#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schroeder {

enum class Suite {
  Paths,
  Evolve,
  Matchings,
  Permutations,
  Series,
  Enumerate,
  Identities,
  Conjecture,
  All,
};

std::string_view suite_name(Suite s) noexcept;
Suite parse_suite(std::string_view text);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  Suite suite = Suite::Paths;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool passed() const;
};

struct VerifyOptions {
  int max_length = 12;      // exhaustive round-trip sweeps
  int census_length = 14;   // image censuses of the full evolutions
  int closure_length = 16;  // closure counts against the series
  int perm_n = 7;           // build/extract round trips
  int table_n = 6;          // length polynomials checked against fixed values
  int identity_n = 10;      // single-parameter identities
  int identity_j_n = 8;     // identities refined by the number of specials
  int conjecture_n = 8;     // Narayana rows of the length distribution
  int conjecture_exponent = 18;
  unsigned threads = 1;
};

/// `All` expands to every other suite in declaration order.
std::vector<SuiteReport> run_suite(Suite suite, const VerifyOptions& options = {});

}  // namespace schroeder
