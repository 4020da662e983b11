#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wildsets {

struct SelftestResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Embedded invariant suites: reciprocity, rank formula, the independence
/// criterion, smile symmetry and construction round trips. `samples` scales
/// the number of random cases.
std::vector<SelftestResult> run_selftest(std::uint64_t seed, unsigned samples = 100);

}  // namespace wildsets
