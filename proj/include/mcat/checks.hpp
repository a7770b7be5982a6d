// Self-contained verification suites behind the `check` command: dimension
// pipelines compared against closed-form expected values, graded-count
// comparisons, braid invertibility, and the randomized interchange property
// suite. Failures are reported, not thrown.
#pragma once

#include <string>
#include <vector>

namespace mcat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckResult> results;
  bool all_pass() const;
};

// Suites accepted by run_check_suite, in display order:
//   core         dimension pipeline for symmetric d=1..4 (d!), hecke d=2,3
//                (d!), wreath Z/2 d=1..3 (2^d d!)
//   daha         degenerate affine Hecke graded counts at d=2 ((L+1)^2)
//   braid        braid invertibility at d=2,3 and graded counts at d=2 (2L+1)
//   interchange  randomized normalization properties (uses seed and cases)
std::vector<std::string> check_suite_names();

// Runs one suite. seed and cases only affect the interchange suite. Throws
// UsageError for an unknown suite name.
CheckReport run_check_suite(const std::string& suite, unsigned long seed, int cases);

}  // namespace mcat
