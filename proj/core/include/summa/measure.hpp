#pragma once

#include "summa/normdesc.hpp"
#include "summa/scalar.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace summa {

// Finite ground set of labeled atoms, optionally carrying exact base
// probability weights (positive on atoms is not required here; the
// martingale layer enforces positivity on cells).
struct AtomSpace {
  std::vector<std::string> labels;
  std::optional<std::vector<Rational>> base_weights;  // sums to 1 when present

  static AtomSpace uniform(int n);
  static AtomSpace weighted(std::vector<std::string> labels,
                            std::vector<Rational> weights);
  int size() const { return static_cast<int>(labels.size()); }
};

// Partition of the atoms; cells canonically sorted by least atom index.
struct PartitionAlgebra {
  std::vector<std::vector<int>> cells;  // 0-based atom indices

  static PartitionAlgebra discrete(int n);
  static PartitionAlgebra trivial(int n);
  static PartitionAlgebra from_cells(std::vector<std::vector<int>> cells, int n);

  int n_atoms() const;
  // true iff every cell of this partition is a union of cells of `finer`.
  bool refined_by(const PartitionAlgebra& finer) const;
  // cell index containing a given atom
  std::vector<int> atom_to_cell() const;
  // Is the atom set A a union of cells?
  bool measurable(const std::vector<int>& atoms) const;
};

// Real, complex, or vector weights attached per atom; the measure of a
// set is the exact sum of its atoms' weights.
struct SignedMeasure {
  std::shared_ptr<const AtomSpace> space;
  ValueKind kind = ValueKind::Real;
  NormDescriptor norm = NormDescriptor::l2();  // for vector weights
  std::vector<Value> weights;

  static SignedMeasure real(std::shared_ptr<const AtomSpace> sp,
                            std::vector<Rational> w);
  static SignedMeasure complex(std::shared_ptr<const AtomSpace> sp,
                               std::vector<std::pair<Rational, Rational>> w);
  static SignedMeasure vector(std::shared_ptr<const AtomSpace> sp,
                              std::vector<std::vector<Rational>> w,
                              NormDescriptor nd);

  int n_atoms() const { return static_cast<int>(weights.size()); }
  bool is_real() const { return kind == ValueKind::Real; }
  bool nonneg() const;  // real weights all >= 0

  Value of(const std::vector<int>& atoms) const;  // exact set measure
  Rational real_of(const std::vector<int>& atoms) const;
  Value total() const;
};

// |mu|(A) for A in B(P): sum over cells inside A of ||mu(cell)||, the sup
// over refinements within the algebra.  Exact for real weights and for
// l1 / linf vector norms; float Scalar otherwise.
Scalar total_variation(const SignedMeasure& mu, const PartitionAlgebra& P,
                       const std::vector<int>& A);

// Same on the discrete algebra over all atoms.
Scalar total_variation(const SignedMeasure& mu);

struct JordanParts {
  SignedMeasure pos, neg;
};
// mu+ = (|mu|+mu)/2, mu- = (|mu|-mu)/2 atomwise; real weights only.
JordanParts jordan_decompose(const SignedMeasure& mu);

struct HahnParts {
  std::vector<int> P, Q;  // atom index sets; zero-weight atoms land in P
};
HahnParts hahn_decompose(const SignedMeasure& mu);

// Atomwise density h = d mu / d nu; requires mu << nu (nu real
// nonnegative); errors name the offending atom.
std::vector<Rational> radon_nikodym(const SignedMeasure& mu,
                                    const SignedMeasure& nu);

struct LebesgueParts {
  SignedMeasure ac, sing;
  std::vector<Rational> density;  // of the a.c. part w.r.t. nu
};
LebesgueParts lebesgue_decompose(const SignedMeasure& mu,
                                 const SignedMeasure& nu);

// d(A, B) = mu(A symmetric-difference B), exact; mu real nonnegative.
Rational symdiff_distance(const SignedMeasure& mu, const std::vector<int>& A,
                          const std::vector<int>& B);

}  // namespace summa
