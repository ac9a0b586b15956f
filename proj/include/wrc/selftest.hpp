#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace wrc {

struct SelftestReport {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
};

// Runs the randomized property suite across every module, printing one line
// per group with its pass count. Fully determined by the seed.
SelftestReport run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace wrc
