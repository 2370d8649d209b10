#pragma once

#include "summa/rational.hpp"

#include <compare>
#include <vector>

namespace summa {

// A finite sum of terms c * x^(1/v) with c, x rational, x >= 0, v >= 1.
// Comparisons are certified through exact rational interval enclosures
// with adaptive refinement; terms over the same square class merge, so
// structurally equal sums compare equal without any refinement.
class RootSum {
 public:
  void add(const Rational& c, const Rational& x, unsigned v = 2);
  void add_rational(const Rational& c) { add(c, 1, 1); }

  std::pair<Rational, Rational> bounds(unsigned bits) const;
  double approx() const;

  // LE / EQ / GE certified, UNDECIDED if the refinement cap is reached
  // (only possible when the two sums are equal as real numbers but not
  // recognized structurally).
  enum class Cmp { LT, EQ, GT, UNDECIDED };
  static Cmp compare(const RootSum& a, const RootSum& b,
                     unsigned max_bits = 512);

 private:
  struct Term {
    Rational coeff;
    Rational radicand;  // >= 0
    unsigned root;      // v
  };
  std::vector<Term> terms_;
  void normalize();
};

}  // namespace summa
