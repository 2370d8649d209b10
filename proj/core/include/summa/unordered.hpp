#pragma once

#include "summa/normdesc.hpp"
#include "summa/scalar.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace summa {

// Enumeration guards (desk-scale budgets).  The subset guard is the one
// configurable knob; the others are fixed.
long subset_guard();                // default 24: 2^m subset enumerations
void set_subset_guard(long guard);  // capped at 30
inline constexpr long kSignedSubsetGuard = 16;  // 3^m signed-subset enumerations
inline constexpr long kWNormGuard = 12;
inline constexpr long kSignWindowGuard = 12;  // ternary window enumeration

struct SignPattern {
  std::vector<int> signs;  // entries +1 / -1
  static SignPattern alternating(std::size_t n);
};

// A finite or streamed family of values indexed by 1..N.  Streamed
// families are deterministic and carry a declared horizon; convergence
// beyond the horizon is only ever certified through the analytic tail
// bounds attached by the named constructors, never from the finitely
// many enumerated terms.
struct IndexedFamily {
  enum class Kind { Finite, Streamed };

  Kind kind = Kind::Finite;
  ValueKind vkind = ValueKind::Real;
  int dim = 0;
  NormDescriptor norm = NormDescriptor::l2();
  std::string name = "finite";

  std::vector<Value> terms;          // finite families
  std::function<Value(long)> gen;    // streamed families, 1-based
  long horizon = 0;

  // Bound on sup over finite B in (l, inf) of ||sum_B f||^tail_power.
  std::function<Rational(long)> tail_bound_pow;
  int tail_power = 1;
  // Bound on sum over j > l of ||f_j||, when the family is norm-summable.
  std::function<Rational(long)> tail_abs_bound;

  long size() const { return kind == Kind::Finite ? static_cast<long>(terms.size()) : horizon; }
  Value term(long j) const;  // 1-based

  static IndexedFamily finite_real(std::vector<Rational> t);
  static IndexedFamily finite_complex(std::vector<std::pair<Rational, Rational>> t);
  static IndexedFamily finite_vector(std::vector<std::vector<Rational>> t,
                                     NormDescriptor nd);
  // f_j = scale * ratio^j, |ratio| < 1.
  static IndexedFamily geometric(const Rational& ratio, const Rational& scale,
                                 long horizon);
  // f_j = (-1)^j / j: conditionally convergent, fails the Cauchy criterion.
  static IndexedFamily alternating_harmonic(long horizon);
  // v_j = e_j / j in R^horizon with the l2 norm.
  static IndexedFamily orthogonal_decay(long horizon);
  // v_j = scale * ratio^j * e_1 in R^dim.
  static IndexedFamily geometric_vector(const Rational& ratio,
                                        const Rational& scale, long horizon,
                                        int dim);
  static IndexedFamily zeros(long horizon);
};

// Exact sum over a subset of indices (1-based), vector-valued termwise.
Value subset_sum(const IndexedFamily& F, const std::vector<long>& B);

struct SupNormResult {
  Scalar norm;               // float when the norm involves a root
  NormEval eval;             // exactly comparable representation
  std::vector<long> argmax;  // 1-based subset attaining the sup
  std::vector<int> arg_coeff;  // z: signs; w: root indices (k of e^{2 pi i k/K})
};

// sup over nonempty subsets B of ||sum_B f||, by exhaustive enumeration.
SupNormResult y_norm(const IndexedFamily& F);

// sup over nonempty B and sign maps beta : B -> {1,-1} of ||sum beta f||.
// Real scalar families collapse to sum |f_j| exactly; other kinds are
// enumerated (guarded).
SupNormResult z_norm(const IndexedFamily& F);

// sup over B and beta : B -> K-th roots of unity of |sum beta f|, complex
// scalar terms.  A lower bound for the T-valued W-norm, monotone along
// K | K'.
SupNormResult w_norm(const IndexedFamily& F, int K);

struct CauchyVerdict {
  enum class Status { Pass, Fail, Inconclusive };
  Status status = Status::Inconclusive;
  long prefix = 0;  // Pass: A_eps = {1..prefix}
  std::string certificate;
  std::vector<long> witness;        // Fail: finite B with ||sum_B f|| >= eps
  long witness_refutes_prefix = 0;  // witness is disjoint from {1..this}
  double witness_norm = 0;
};

// Generalized Cauchy criterion at eps, explored up to min(N, horizon).
// Pass requires a certificate valid for the whole family (analytic tail
// bound, or a finite family); Fail is reported with a concrete witness;
// everything else is Inconclusive.
CauchyVerdict generalized_cauchy_check(const IndexedFamily& F, const Scalar& eps,
                                       long N);

struct SumResult {
  Value value;
  Scalar error_bound;
  long terms_used = 0;
};

// Sum over the certified prefix; refuses (PreconditionError) unless the
// Cauchy check passes at eps.
SumResult unordered_sum_eval(const IndexedFamily& F, const Scalar& eps);

struct RearrangementReport {
  Value sum, permuted_sum;
  bool agree = false;
  bool exact = false;  // finite family: equality is exact
  // Witness mode, populated when the family fails the Cauchy criterion:
  // a permutation prefix whose partial sums oscillate by >= eps.  Blocks
  // are packed first-fit by index.
  std::optional<std::vector<long>> divergent_prefix;
  std::vector<double> block_norms;
};

RearrangementReport rearrangement_test(const IndexedFamily& F,
                                       const std::vector<long>& perm,
                                       const Scalar& eps);

struct SignUniformVerdict {
  enum class Status { Pass, Fail, Inconclusive };
  Status status = Status::Inconclusive;
  long L_eps = 0;
  std::string method;  // "tail-bound" | "scalar-reduction" | "exhaustive" | "sampled"
  std::string note;
};

// Uniform convergence of sign-randomized partial sums: verifies
// sup over sign patterns of ||sum_{j=l+1}^n eps_j v_j|| < 2 eps for
// n > l >= L_eps.
SignUniformVerdict sign_uniform_convergence_check(const IndexedFamily& F,
                                                  const Scalar& eps, long N,
                                                  bool allow_sampled = true);

}  // namespace summa
