#pragma once

#include "summa/scalar.hpp"

#include <set>
#include <utility>
#include <vector>

namespace summa {

// Function on [0,1) constant on the 2^level dyadic intervals of one
// level, with exact rational values.  Value j lives on [j 2^-l, (j+1) 2^-l).
struct DyadicStep {
  int level = 0;
  std::vector<Rational> values{Rational(0)};

  static DyadicStep constant(const Rational& c, int level = 0);
  static DyadicStep from_values(int level, std::vector<Rational> v);

  long cells() const { return static_cast<long>(values.size()); }
  DyadicStep at_level(int finer) const;  // exact re-leveling, finer >= level
  Rational value_at(const Rational& x) const;

  Rational integral() const;
  // integral over the dyadic interval [j 2^-l, (j+1) 2^-l)
  Rational integral_dyadic(int l, long j) const;

  Rational lp_pow(long p) const;  // ||f||_p^p for integer p >= 1, exact
  Rational linf() const;          // max |value|
  Scalar lp_norm(const Exponent& p) const;

  friend DyadicStep operator+(const DyadicStep& a, const DyadicStep& b);
  friend DyadicStep operator-(const DyadicStep& a, const DyadicStep& b);
  friend DyadicStep operator*(const DyadicStep& a, const DyadicStep& b);
  DyadicStep scaled(const Rational& c) const;
  DyadicStep abs() const;
  friend bool operator==(const DyadicStep& a, const DyadicStep& b);
};

DyadicStep pointwise_max(const DyadicStep& a, const DyadicStep& b);

// A_l(f): averages over dyadic intervals of level l <= f.level.
DyadicStep dyadic_average(const DyadicStep& f, int l);

// r_l rendered at `level` >= l.
DyadicStep rademacher(int l, int level);

// w_I = prod of Rademacher factors; w_{} == 1.  level >= max(I).
DyadicStep walsh(const std::set<int>& I, int level);

// Positive measure: nonnegative step density plus finitely many point
// masses at dyadic-rational locations (atoms on an interval endpoint
// belong to the left-closed interval containing them).
struct PointMass {
  Rational loc;   // dyadic rational in [0,1)
  Rational mass;  // > 0
};

struct DyadicMeasure {
  DyadicStep density;
  std::vector<PointMass> atoms;

  static DyadicMeasure lebesgue();
  static DyadicMeasure unit_mass_at(const Rational& loc);
  static DyadicMeasure from(DyadicStep density, std::vector<PointMass> atoms);

  Rational mass_dyadic(int l, long j) const;
  Rational total() const;
};

// Truncated dyadic maximal function: on each level-L cell, the max of
// mu(I)/|I| over the dyadic ancestors I (levels 0..L) of the cell.
DyadicStep dyadic_maximal(const DyadicMeasure& mu, int L);

struct LevelSetReport {
  std::vector<std::pair<int, long>> intervals;  // maximal (level, index)
  Rational lebesgue{0};                         // |E_t|
  Rational mass{0};                             // mu(E_t)
  bool strict_certified = false;  // t |E_t| < mu(E_t), exact, when nonempty
};

// Pairwise-disjoint maximal dyadic intervals with mu(I) > t |I|, down to
// depth L.
LevelSetReport maximal_level_sets(const DyadicMeasure& mu, const Rational& t,
                                  int L);

struct RatInterval {
  Rational lo, hi;  // open interval (lo, hi), lo < hi
};

// Sublist with the same union in which no point lies in more than two
// intervals; certified by an exact endpoint sweep.
std::vector<RatInterval> covering_reduce(const std::vector<RatInterval>& in);

struct HlReport {
  Rational lower{0};  // |E_t| lower bound (grid maximal function level set)
  Rational upper{0};  // |E_t| upper bound (outward-snapped covering)
  Rational bound{0};  // 2 t^-1 mu(total)
  Rational slack{0};  // grid slack for the upper comparison
  bool holds_lower = false;
  bool holds_upper_with_slack = false;
};

// Hardy-Littlewood weak-type check over intervals with level-L dyadic
// endpoints.  The grid maximal function underestimates the true one, so
// `lower` <= |E_t| <= `upper`, and |E_t| <= 2 t^-1 mu(total) must show up
// as holds_lower; the upper comparison carries the covering slack.
HlReport hl_maximal_weak_type(const DyadicMeasure& mu, const Rational& t,
                              int L);

// E|sum_j eps_j a_j|^p over the 2^n sign patterns, exact.  Any integer
// p >= 1 (odd p goes through enumeration, which stays rational); n <= 20
// for enumeration, even p additionally has the multinomial route for any
// n.  For even p within the guard both routes run and must agree.
Rational rademacher_moment(const std::vector<Rational>& a, long p);
Rational rademacher_moment_enumerate(const std::vector<Rational>& a, long p);
Rational rademacher_moment_multinomial(const std::vector<Rational>& a, long p);

struct SignAverageReport {
  std::size_t n = 0;
  Exponent p = Exponent(2);
  Scalar moment;      // E|sum a_l r_l|^p; exact when p is an even integer
  Scalar comparison;  // (sum a_l^2)^(p/2); for p = inf, sum |a_l|
  double ratio = 0;   // moment / comparison
  bool monotone_vs_l2 = true;  // ||f||_p vs ||f||_2 ordered as p dictates
};

SignAverageReport khintchine_report(const std::vector<Rational>& a,
                                    const Exponent& p);

struct LacunaryResult {
  Rational moment;            // || sum a_j z^{n_j} ||_{2^k}^{2^k}, exact
  bool collapse_held = true;  // contributing frequency multisets pair up
  double gap_q = 0;           // min n_{j+1}/n_j (recorded, not enforced)
};

LacunaryResult lacunary_moment(
    const std::vector<long>& freqs,
    const std::vector<std::pair<Rational, Rational>>& coeffs, int k);

}  // namespace summa
