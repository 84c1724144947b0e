#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conductor {

struct SuiteOptions {
  std::optional<unsigned> p;  // restrict to one prime where the suite ranges over primes
  std::uint64_t seed = 1;
  std::optional<int> precision;  // overrides the per-group default
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Names in acceptance order: conductor, twist, iwasawa, trace, different,
/// degree, idempotent, integrality, ext, fitting, chartab, exponents.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

/// Every suite, results in suite_names() order.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt);

}  // namespace conductor
