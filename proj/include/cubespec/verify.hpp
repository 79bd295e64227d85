#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubespec {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED5EED5EED5EEDull;

struct CheckResult {
  std::string name;
  int cap = 0;  // largest n (or order) the check actually ran at
  bool pass = false;
  std::string detail;  // first counterexample, or "ok"
};

struct VerifyOptions {
  double jacobi_tol = 1e-12;
  double cluster_gap = 1e-6;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t trials = 100000;
  int monte_carlo_seeds = 100;
};

// Runs every cross-route invariant of the library up to min(n_max, its own
// cap). Failures come back as data, never exceptions. n_max = 0 gives an
// empty report. Oracle-backed checks (first-passage, Kirchhoff,
// characteristic-polynomial iteration) top out at n = 6 by their own caps;
// formula-only checks run to 64.
std::vector<CheckResult> verify_suite(int n_max,
                                      const VerifyOptions& options = {});

}  // namespace cubespec
