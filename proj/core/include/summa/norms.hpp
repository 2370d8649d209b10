#pragma once

#include "summa/scalar.hpp"

#include <vector>

namespace summa {

// Finite sequence with entries all in one mode (exact or float).
struct SeqVector {
  std::vector<CScalar> entries;

  static SeqVector from_rationals(const std::vector<Rational>& v);
  static SeqVector from_doubles(const std::vector<double>& v);

  std::size_t size() const { return entries.size(); }
  bool all_exact() const;
  bool is_real() const;
};

// (sum |v_i|^p)^(1/p) for finite p, max |v_i| for p = inf.  Exact rational
// when p is 1 or inf and the entries are exact reals.
Scalar lp_norm(const SeqVector& v, const Exponent& p);

struct HolderReport {
  Scalar lhs, rhs;
  bool holds = false;
  bool equality_within_tol = false;
};

// lhs = ||f g||_1 for the pointwise product, rhs = ||f||_p ||g||_q,
// for conjugate exponents 1/p + 1/q = 1.
HolderReport holder_verify(const SeqVector& f, const SeqVector& g,
                           const Exponent& p, const Exponent& q);

struct InterpolationReport {
  double t = 0;
  Scalar lhs, rhs;
  bool holds = false;
};

// Log-convexity of p -> ||f||_p in 1/p: ||f||_r <= ||f||_p^t ||f||_q^(1-t)
// where 1/r = t/p + (1-t)/q and 0 < p < r < q <= inf.
InterpolationReport lp_interpolate(const SeqVector& f, const Exponent& p,
                                   const Exponent& q, const Exponent& r);

// (a+b)^p <= a^p + b^p for a, b >= 0 and 0 < p <= 1, within tolerance.
bool p_subadditivity_check(const Scalar& a, const Scalar& b, const Exponent& p);

}  // namespace summa
