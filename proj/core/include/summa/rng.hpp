#pragma once

#include "summa/rational.hpp"

#include <cstdint>
#include <random>

namespace summa {

// Deterministic generator for randomized sweeps.  mt19937_64 is fully
// specified by the standard and the reductions below avoid the
// implementation-defined distribution classes, so a fixed seed yields
// byte-identical reports everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (eng_() & 1) != 0; }

  double unit() { return (eng_() >> 11) * 0x1.0p-53; }

  // Nonzero-denominator rational with num in [num_lo, num_hi], den in [1, den_hi].
  Rational rational(long num_lo, long num_hi, long den_hi) {
    return Rational(range(num_lo, num_hi), range(1, den_hi));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace summa
