#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace patho::cli {

struct Failure {
  std::size_t trial = 0;
  std::string input;
  std::string expected;
  std::string got;
};

struct PropertyReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Failure> failures;
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
  /// One JSON object; wall time only when asked, so reruns stay byte-identical.
  std::string json(bool with_timing = false) const;
};

std::vector<std::string> suite_names();

/// Runs `trials` independent trials; trial k draws from an RNG seeded by
/// (seed, k), so the report does not depend on `threads`. Unknown names throw
/// ParseError.
PropertyReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace patho::cli
