#pragma once

// Exhaustive verification suites over small tubes. Work items are spread over
// worker threads; results are merged in item order, so reports do not depend
// on scheduling.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "regulus/tilting.hpp"

namespace regulus {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few diagnostics
  double seconds = 0.0;

  bool ok() const { return failed == 0; }
};

struct VerificationReport {
  std::vector<SuiteResult> suites;  // sorted by name

  bool ok() const;
};

/// Worker count: REGULUS_THREADS if set and positive, else hardware
/// concurrency, never below 1.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. The first
/// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Single-tube pairs (Y, P) with P = {t} and, if `with_empty_p`, P = {}.
std::vector<Pair> single_tube_pairs(int rank, bool with_empty_p);

/// Brute-force list of branch modules on one tube: every multiplicity-free
/// set of segments with length < rank passed through check_branch_module.
std::vector<BranchModule> brute_force_branch_modules(int rank);

SuiteResult suite_homext(int max_rank, int max_length);
SuiteResult suite_theorem8(const std::vector<int>& ranks, int len_bound_mult);
SuiteResult suite_prop6(const std::vector<int>& ranks);
SuiteResult suite_closure(const std::vector<int>& ranks, int len_bound_mult);
SuiteResult suite_minimality(const std::vector<int>& ranks);
SuiteResult suite_enumerator(const std::vector<int>& ranks);
SuiteResult suite_wide_consistency(const std::vector<int>& ranks, int len_bound_mult);

struct VerifyOptions {
  std::vector<int> ranks{2, 3, 4};
  int len_bound_mult = 3;
  int hom_max_length = 12;
  std::vector<std::string> only;  // suite names; empty runs all
};

std::vector<std::string> suite_names();
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace regulus
