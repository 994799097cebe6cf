#ifndef HIGGS_SELFTEST_HPP
#define HIGGS_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace higgs {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return cases > 0 && failures == 0; }
};

// Randomized property suites over every module. Each suite draws from its
// own stream derived from `seed`, so results do not depend on suite order.
std::vector<SuiteResult> run_selftest(std::uint64_t seed);

}  // namespace higgs

#endif
