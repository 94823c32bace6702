#pragma once
// Batch invariant checks.  Each suite enumerates its cases in a fixed order
// (small cases first), evaluates them in parallel or serially, and reports the
// first failing case in that order.

#include <cstdint>
#include <string>
#include <vector>

#include "polylog/serialize.hpp"

namespace polylog {

struct VerifyOptions {
  int max_sides = 5;      // polygon suites
  int max_edges = 6;      // d^2 on forests
  int cycling_edges = 5;  // cycling-map suites
  int max_catalan = 7;
  int max_tree_sum = 5;   // decomposable boundary
  int random_cases = 500;
  std::uint64_t seed = 42;
  bool parallel = true;
};

struct SuiteReport {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string counterexample;  // first failure in enumeration order
  double seconds = 0;          // not part of the rendered report
  bool ok() const { return failures == 0; }
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);  // throws std::invalid_argument
std::vector<SuiteReport> run_all(const VerifyOptions& opt);

// Deterministic text and JSON, no timings.
std::string render(const std::vector<SuiteReport>& r);
Json to_json(const std::vector<SuiteReport>& r);

}  // namespace polylog
