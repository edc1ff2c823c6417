#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace solvcert {

struct SelftestResult {
  std::string suite;
  bool passed;
  std::string detail;  // failure description, or a one-line summary
};

/// Runs every invariant suite (exact kernel, Lie operations, decision
/// coherence, flags, representations, exponentials, group classification)
/// with randomness derived from the seed.  Deterministic given the seed.
std::vector<SelftestResult> run_selftest(std::uint64_t seed);

bool all_passed(const std::vector<SelftestResult>& results);

}  // namespace solvcert
