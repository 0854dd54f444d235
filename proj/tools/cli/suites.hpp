#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace dposet::cli {

struct PropertyResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// Reported but never fails the suite.
  bool informational = false;

  bool passed() const { return informational || failures == 0; }
};

struct SuiteReport {
  std::string suite;
  int max_n = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

/// Suite names accepted by `run_suite`.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite ("all" runs every suite in `suite_names` order).
/// Double posets of size <= min(max_n, 4) are enumerated exhaustively;
/// pair properties are exhaustive in that range too, triple properties up to
/// size 3. Larger sizes use a sample drawn from `seed`.
SuiteReport run_suite(const std::string& suite, int max_n, std::uint64_t seed);

void print_report(const SuiteReport& report, std::ostream& os);

}  // namespace dposet::cli
