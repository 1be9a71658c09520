#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "partctl/exact.hpp"

namespace partctl {

// One compared inequality or identity: pass iff the relation holds between
// the two sides.
struct Check {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct GraphRecord {
  // Enough to rebuild the input, e.g. "random_connected n=8 m=12 seed=...".
  std::string spec;
  int n = 0;
  int m = 0;
  double d = 0.0;
  std::map<std::string, std::string> values;  // exact values and constructive counts
  std::vector<Check> checks;
  double seconds = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<GraphRecord> records;

  int checks() const;
  int failures() const;
  bool passed() const { return failures() == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  // Graphs (or table size for t-table); 0 picks the suite default.
  int count = 0;
  ExactBudget budget;
};

// Suites: inequalities, t-table, trees, constr-upper, erdos-lehner.
// Deterministic in the seed. Throws UnknownSuite.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options = {});

std::vector<std::string> suite_names();

std::string report_json(const VerifyReport& report);
void write_table(std::ostream& out, const VerifyReport& report);

}  // namespace partctl
