#pragma once

#include "summa/normdesc.hpp"
#include "summa/rootsum.hpp"
#include "summa/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace summa {

enum class Interp { Linear, JumpLeft, JumpRight };

// Path known at finitely many rational knots with points in Q^d, carried
// by a norm descriptor.  Linear interpolation, or piecewise-constant with
// jumps (JumpRight: right-continuous, value changes at each knot;
// JumpLeft: left-continuous).
struct Polyline {
  std::vector<Rational> knots;                // strictly increasing, >= 2
  std::vector<std::vector<Rational>> points;  // one per knot, dim d
  Interp interp = Interp::Linear;
  NormDescriptor norm = NormDescriptor::l2();

  static Polyline make(std::vector<Rational> knots,
                       std::vector<std::vector<Rational>> points,
                       Interp interp = Interp::Linear,
                       NormDescriptor norm = NormDescriptor::l2());

  int dim() const { return static_cast<int>(points.front().size()); }
  const Rational& a() const { return knots.front(); }
  const Rational& b() const { return knots.back(); }

  std::vector<Rational> at(const Rational& t) const;           // F(t)
  std::vector<Rational> left_limit(const Rational& t) const;   // F(t-)
  std::vector<Rational> right_limit(const Rational& t) const;  // F(t+)
};

struct LengthResult {
  Scalar length;           // exact Scalar for l1/linf/scalar paths
  RootSum exact_form;      // certified comparisons for exact-capable norms
  bool exact_capable = false;
  double approx = 0;
};

// Lambda = sum of segment norms; for jump interpolation the same sum over
// knot increments.  Refinements along segments cannot increase it.
LengthResult path_length(const Polyline& f);

// Length of the restriction to [a, x]; x need not be a knot.
LengthResult path_length_to(const Polyline& f, const Rational& x);

struct Variation {
  Rational pos, neg, total;
};

// Positive/negative variation of a scalar polyline: P + N = Lambda and
// P - N = f(b) - f(a), exactly.
Variation pos_neg_variation(const Polyline& f);

struct IntervalSpec {
  Rational lo, hi;
  bool lo_closed = true, hi_closed = true;

  static IntervalSpec closed(Rational lo, Rational hi) { return {lo, hi, true, true}; }
  static IntervalSpec open(Rational lo, Rational hi) { return {lo, hi, false, false}; }
};

// Finitely-additive V-valued interval measure nu induced by a path via
// one-sided limits: nu((r,t)) = F(t-) - F(r+), nu([r,t]) = F(t+) - F(r-),
// and the half-open mixtures accordingly; nu({c}) = F(c+) - F(c-).
class IntervalMeasureFromPath {
 public:
  explicit IntervalMeasureFromPath(Polyline src);

  const Polyline& source() const { return src_; }
  std::vector<Rational> of(const IntervalSpec& iv) const;
  // Union evaluated by first normalizing to canonical disjoint components.
  std::vector<Rational> of_union(const std::vector<IntervalSpec>& ivs) const;

  // ||nu(A)|| <= mu_alpha(A) where alpha is cumulative length; certified
  // where the norm admits exact form.
  bool dominated(const IntervalSpec& iv) const;
  double alpha_mass(const IntervalSpec& iv) const;

 private:
  Polyline src_;
};

IntervalMeasureFromPath path_measure(const Polyline& f);

// Piecewise polynomial with rational coefficients: piece i applies on
// [breaks[i], breaks[i+1]); a single piece covers everything.
struct PiecewisePoly {
  std::vector<Rational> breaks;                // empty for a single piece
  std::vector<std::vector<Rational>> coeffs;   // c0 + c1 t + c2 t^2 + ...

  static PiecewisePoly poly(std::vector<Rational> c);
  // "t^2", "1 + 2*t - 3/2*t^3", ...
  static std::optional<PiecewisePoly> parse(const std::string& expr);

  Rational eval(const Rational& t) const;
  double sup_deriv(const Rational& lo, const Rational& hi) const;
  double sup_abs(const Rational& lo, const Rational& hi) const;
};

struct StieltjesResult {
  std::vector<Rational> value;  // exact mesh sum (midpoint evaluation)
  double error_bound = 0;       // omega_phi(mesh) * Lambda
  double mesh_width = 0;
  long mesh_points = 0;
};

// Riemann-Stieltjes sum of phi against the path on a mesh of width
// <= delta containing every knot.
StieltjesResult riemann_stieltjes(const PiecewisePoly& phi, const Polyline& f,
                                  const Rational& delta);

struct ModulusEntry {
  double eps = 0;
  double delta_hat = 0;  // upper bound for the true modulus
};

// delta_hat(eps) = 1 - max ||(v+w)/2|| over unit vectors with
// ||v - w|| >= eps, searched on a G-point sphere grid with local
// refinement.  Dimensions 2 and 3 only.
std::vector<ModulusEntry> uniform_convexity_modulus(
    const NormDescriptor& norm, int dim, const std::vector<double>& eps_grid,
    long G);

struct AveragedConvexityReport {
  double a_norm = 0;
  double weighted_distance = 0;  // sum t_j ||v_j - a||
  bool premise = false;          // ||a|| > 1 - eta
  bool conclusion = false;       // weighted_distance < eps
  bool counterexample = false;   // premise holds, conclusion fails
};

// The averaged uniform-convexity lemma at a chosen (eps, eta) pairing.
AveragedConvexityReport averaged_convexity_check(
    const NormDescriptor& norm, const std::vector<std::vector<Rational>>& vs,
    const std::vector<Rational>& weights, double eps, double eta);

// eta(eps) valid for the l2 norm, from the parallelogram law.
double l2_averaged_eta(double eps);

struct StrictConvexityResult {
  bool witness_found = false;
  std::vector<double> v, w;
  double t = 0.5;
  double midpoint_norm = 0;
};

// Searches the sphere grid for a nontrivial unit segment on the sphere:
// l1/linf produce witnesses, lp (1 < p < inf) does not at tau = 1e-9.
StrictConvexityResult strict_convexity_witness(const NormDescriptor& norm,
                                               int dim, long G);

}  // namespace summa
