#pragma once

#include "summa/dyadic.hpp"
#include "summa/measure.hpp"
#include "summa/normdesc.hpp"
#include "summa/rootsum.hpp"

#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace summa {

// Refining partitions over a weighted atom space.  Every cell of every
// stage must carry positive base mass; the constructor rejects null cells
// rather than quotienting them away.
struct Filtration {
  std::shared_ptr<const AtomSpace> space;
  std::vector<PartitionAlgebra> stages;  // stage j at index j-1; refining

  static Filtration make(std::shared_ptr<const AtomSpace> space,
                         std::vector<PartitionAlgebra> stages);
  // [0,1) at resolution L: 2^L atoms of mass 2^-L; stage j = level-j
  // blocks, optionally preceded by the trivial partition as stage 1.
  static Filtration dyadic(int L, bool include_trivial = false);

  int n_stages() const { return static_cast<int>(stages.size()); }
  int n_atoms() const { return space->size(); }
  const PartitionAlgebra& stage(int j) const;  // 1-based
  Rational atom_mass(int atom) const;
  Rational set_mass(const std::vector<int>& atoms) const;
};

// Cell function per stage; stage-j values constant on stage-j cells
// (checked at construction).
struct AdaptedSequence {
  std::shared_ptr<const Filtration> filt;
  ValueKind vkind = ValueKind::Real;
  NormDescriptor norm = NormDescriptor::l2();
  std::vector<std::vector<Value>> values;  // [stage][atom]

  static AdaptedSequence make(std::shared_ptr<const Filtration> f,
                              std::vector<std::vector<Value>> values,
                              NormDescriptor norm = NormDescriptor::l2());
  // f_j = E(f | B_j) for a final atom function f: always a martingale.
  static AdaptedSequence from_final(std::shared_ptr<const Filtration> f,
                                    std::vector<Value> final_values,
                                    NormDescriptor norm = NormDescriptor::l2());
  // Dyadic martingale of a level-L density: f_j = A_j(h), j = 1..L.
  static AdaptedSequence dyadic_martingale(const DyadicStep& h);

  int n_stages() const { return static_cast<int>(values.size()); }
  const std::vector<Value>& stage(int j) const;  // 1-based
  Rational integral_norm(int j) const;           // ||f_j||_1 approx-free for real
  RootSum norm_integral_rootsum(int j) const;    // exact form of int ||f_j||
};

// Exact cell averages: E(f | stage j) for an atom function f measurable
// at stage l >= j.
std::vector<Value> conditional_expectation(const Filtration& filt,
                                           const std::vector<Value>& f,
                                           int from_stage, int to_stage);
// Convenience: condition an arbitrary atom function straight onto stage j.
std::vector<Value> condition_to_stage(const Filtration& filt,
                                      const std::vector<Value>& f, int j);

enum class SequenceClass { Martingale, Submartingale, Supermartingale, None };

struct ClassifyReport {
  SequenceClass cls = SequenceClass::None;
  int witness_stage = -1;  // first (stage, cell) breaking equality
  int witness_cell = -1;
  std::string detail;
};

ClassifyReport classify(const AdaptedSequence& seq);

struct DoobParts {
  AdaptedSequence martingale;   // m_j
  AdaptedSequence predictable;  // A_j, A_1 = 0, nondecreasing, B_{j-1}-measurable
};

DoobParts doob_decompose(const AdaptedSequence& seq);

// f_n^*(x) = max_{1<=j<=n} ||f_j(x)||; exact for real scalars and for l1
// or linf vector norms, NormEval-compared otherwise.
std::vector<NormEval> maximal_function(const AdaptedSequence& seq, int n);

struct WeakTypeReport {
  Rational level_set_mass{0};  // mu{f_n^* > t}
  double lhs = 0;              // t * mu{f* > t}
  double rhs = 0;              // sup_n int ||f_n||
  bool holds = false;
  bool certified = false;  // exact comparison succeeded
};

WeakTypeReport weak_type_check(const AdaptedSequence& seq, const Rational& t);

struct DoobLpReport {
  double lhs = 0;       // int (f_n^*)^p
  double rhs = 0;       // constant * int f_n^p
  double constant = 0;  // p 2^(p-1) / (p-1)
  double ratio = 0;     // lhs / int f_n^p
  bool holds = false;
  bool certified = false;
};

// int (f_n^*)^p <= (p 2^(p-1)/(p-1)) int f_n^p for a nonnegative scalar
// submartingale; rational p gives a certified exact comparison.
DoobLpReport doob_lp_check(const AdaptedSequence& seq, const Exponent& p);

struct StoppingTime {
  static constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> tau;  // per atom, value in 1..N or kInf

  static StoppingTime make(const Filtration& filt, std::vector<int> tau);
  static StoppingTime constant(const Filtration& filt, int n);
  // min{ n : ||f_n|| > threshold }, infinity when never.
  static StoppingTime first_passage(const AdaptedSequence& seq,
                                    const Rational& threshold);
  StoppingTime truncated(int N) const;
  bool finite() const;
  int max_finite() const;
};

struct StopResult {
  std::vector<Value> stopped;             // f_tau per atom (defined entries)
  std::vector<bool> defined;              // tau finite (or restricted)
  std::vector<std::vector<int>> classes;  // generating partition of B_tau
};

// f_tau(x) = f_{tau(x)}(x); tau must be finite everywhere unless
// restrict_to_finite is set, in which case evaluation is restricted to
// {tau <= N}.
StopResult stop(const AdaptedSequence& seq, const StoppingTime& tau,
                bool restrict_to_finite = false);

// The stopped sequence g_n = f_{min(tau, n)} (a martingale when f is).
AdaptedSequence stopped_sequence(const AdaptedSequence& seq,
                                 const StoppingTime& tau);

struct OptionalStoppingReport {
  bool holds = false;
  int classes_checked = 0;
  std::string witness;
};

// E(f_N | B_tau) = f_tau, verified as int_A f_tau = int_A f_N exactly on
// every generating class A of B_tau; tau bounded by N = n_stages.
OptionalStoppingReport optional_stopping_check(const AdaptedSequence& seq,
                                               const StoppingTime& tau);

struct ExperimentTrace {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  bool assertions_hold = false;
};

// Named verification experiments: dirac_singular, unit_square,
// slln_average, doubling.  Parameters are passed as string key/values
// ("stages", "seed", "threshold", ...).
ExperimentTrace run_experiment(const std::string& name,
                               const std::map<std::string, std::string>& params);

// Diagnostic only: sup_n int_{||f_n|| > t} ||f_n|| on a grid of t values;
// finite stages cannot certify uniform integrability, so no verdict.
std::vector<std::pair<double, double>> uniform_integrability_profile(
    const AdaptedSequence& seq, const std::vector<Rational>& t_grid);

}  // namespace summa
