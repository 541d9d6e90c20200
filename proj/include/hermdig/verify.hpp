#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hermdig {

struct SuiteFailure {
  std::string hd6;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  int order = 0;
  long long instances = 0;
  long long failure_count = 0;
  std::vector<SuiteFailure> failures;  // the first few, in a fixed order

  bool passed() const { return failure_count == 0; }
};

/// Suites: interlacing, radius, symmetric, small-radius, eta, tournament,
/// classification, sachs, switching, closed-forms. Exhaustive suites run
/// over one digraph per isomorphism class of every order 1..n; the random
/// ones use fixed seeds. Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(std::string_view name, int n, int jobs = 1);

std::vector<std::string_view> suite_names();

}  // namespace hermdig
