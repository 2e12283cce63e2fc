#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace vkt {

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// Description of the first failing instance, empty when all passed.
  std::string first_failure;

  bool pass() const { return failures == 0; }
};

/// Names of the randomized property suites, in run order.
std::vector<std::string> selftest_suites();

/// Runs every suite with `count` instances each. Suites run concurrently on up
/// to `threads` threads; each suite draws from its own generator seeded from
/// `seed` and its position, so results do not depend on scheduling.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::size_t count, unsigned threads = 0);

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t count);

}  // namespace vkt
