#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace superflats {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int max_n = 6;             // exhaustive sweeps cover graphs up to this order
  std::uint64_t seed = 1;    // randomized sweeps
  int random_samples = 60;   // random graphs on 7..9 vertices
  int wildcard_samples = 2000;
};

// Runs the invariant suite over the catalog, the geometry fixtures and
// all small graphs. Each check catches its own exceptions and reports
// them as failures.
std::vector<CheckResult> verify_theorems(const VerifyOptions& options = {});

}  // namespace superflats
