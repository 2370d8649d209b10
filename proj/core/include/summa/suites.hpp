#pragma once

#include "summa/report.hpp"

#include <string>

namespace summa {

struct SuiteOptions {
  std::uint64_t seed = 1;
  // Scales the randomized instance counts down for quick runs; 1 = full.
  int divisor = 1;
  // Test-only: perturbs one expected value so the harness can observe a
  // failure with a witness.
  bool fault_injection = false;
};

// Named invariant batteries: inequalities (scalar/sequence norms plus
// unordered summation), measures, dyadic, martingales, paths, or all.
// Deterministic for a fixed (name, seed).
Report run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace summa
