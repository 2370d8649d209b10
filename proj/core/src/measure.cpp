#include "summa/measure.hpp"

#include "summa/errors.hpp"
#include "summa/rootsum.hpp"

#include <algorithm>
#include <set>

namespace summa {

AtomSpace AtomSpace::uniform(int n) {
  if (n < 1) throw DomainError("AtomSpace: need at least one atom");
  AtomSpace sp;
  for (int i = 0; i < n; ++i) sp.labels.push_back("a" + std::to_string(i));
  sp.base_weights = std::vector<Rational>(static_cast<std::size_t>(n),
                                          Rational(1, n));
  return sp;
}

AtomSpace AtomSpace::weighted(std::vector<std::string> labels,
                              std::vector<Rational> weights) {
  AtomSpace sp;
  if (labels.empty()) throw DomainError("AtomSpace: need at least one atom");
  std::set<std::string> uniq(labels.begin(), labels.end());
  if (uniq.size() != labels.size())
    throw DomainError("AtomSpace: labels must be distinct");
  if (weights.size() != labels.size())
    throw DomainError("AtomSpace: weight/label count mismatch");
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw DomainError("AtomSpace: negative base weight");
    total += w;
  }
  if (total != 1) throw DomainError("AtomSpace: base weights must sum to 1");
  sp.labels = std::move(labels);
  sp.base_weights = std::move(weights);
  return sp;
}

PartitionAlgebra PartitionAlgebra::discrete(int n) {
  PartitionAlgebra p;
  for (int i = 0; i < n; ++i) p.cells.push_back({i});
  return p;
}

PartitionAlgebra PartitionAlgebra::trivial(int n) {
  PartitionAlgebra p;
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  p.cells.push_back(std::move(all));
  return p;
}

PartitionAlgebra PartitionAlgebra::from_cells(
    std::vector<std::vector<int>> cells, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (auto& c : cells) {
    if (c.empty()) throw DomainError("PartitionAlgebra: empty cell");
    std::sort(c.begin(), c.end());
    for (int a : c) {
      if (a < 0 || a >= n || seen[static_cast<std::size_t>(a)])
        throw DomainError("PartitionAlgebra: cells must exactly cover the atoms");
      seen[static_cast<std::size_t>(a)] = true;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw DomainError("PartitionAlgebra: cells must exactly cover the atoms");
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  PartitionAlgebra p;
  p.cells = std::move(cells);
  return p;
}

int PartitionAlgebra::n_atoms() const {
  int n = 0;
  for (const auto& c : cells) n += static_cast<int>(c.size());
  return n;
}

std::vector<int> PartitionAlgebra::atom_to_cell() const {
  std::vector<int> map(static_cast<std::size_t>(n_atoms()), -1);
  for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
    for (int a : cells[static_cast<std::size_t>(ci)])
      map[static_cast<std::size_t>(a)] = ci;
  return map;
}

bool PartitionAlgebra::refined_by(const PartitionAlgebra& finer) const {
  if (n_atoms() != finer.n_atoms()) return false;
  std::vector<int> coarse = atom_to_cell();
  for (const auto& c : finer.cells) {
    int cell = coarse[static_cast<std::size_t>(c.front())];
    for (int a : c)
      if (coarse[static_cast<std::size_t>(a)] != cell) return false;
  }
  return true;
}

bool PartitionAlgebra::measurable(const std::vector<int>& atoms) const {
  std::set<int> in(atoms.begin(), atoms.end());
  for (const auto& c : cells) {
    bool any = false, all = true;
    for (int a : c) {
      if (in.count(a))
        any = true;
      else
        all = false;
    }
    if (any && !all) return false;
  }
  return true;
}

namespace {

std::shared_ptr<const AtomSpace> require_space(
    const std::shared_ptr<const AtomSpace>& sp, std::size_t nw) {
  if (!sp) throw DomainError("SignedMeasure: null atom space");
  if (static_cast<std::size_t>(sp->size()) != nw)
    throw DomainError("SignedMeasure: weight count != atom count");
  return sp;
}

}  // namespace

SignedMeasure SignedMeasure::real(std::shared_ptr<const AtomSpace> sp,
                                  std::vector<Rational> w) {
  SignedMeasure m;
  m.space = require_space(sp, w.size());
  m.kind = ValueKind::Real;
  for (Rational& r : w) m.weights.push_back(Value::real(std::move(r)));
  return m;
}

SignedMeasure SignedMeasure::complex(
    std::shared_ptr<const AtomSpace> sp,
    std::vector<std::pair<Rational, Rational>> w) {
  SignedMeasure m;
  m.space = require_space(sp, w.size());
  m.kind = ValueKind::Complex;
  for (auto& [re, im] : w)
    m.weights.push_back(Value::complex(std::move(re), std::move(im)));
  return m;
}

SignedMeasure SignedMeasure::vector(std::shared_ptr<const AtomSpace> sp,
                                    std::vector<std::vector<Rational>> w,
                                    NormDescriptor nd) {
  SignedMeasure m;
  m.space = require_space(sp, w.size());
  m.kind = ValueKind::Vector;
  m.norm = std::move(nd);
  for (auto& v : w) m.weights.push_back(Value::vector(std::move(v)));
  return m;
}

bool SignedMeasure::nonneg() const {
  if (kind != ValueKind::Real) return false;
  return std::all_of(weights.begin(), weights.end(),
                     [](const Value& v) { return v.re >= 0; });
}

Value SignedMeasure::of(const std::vector<int>& atoms) const {
  Value acc = Value::zero_like(weights.empty() ? Value::real(0) : weights[0]);
  for (int a : atoms) {
    if (a < 0 || a >= n_atoms())
      throw DomainError("SignedMeasure: atom index out of range");
    acc += weights[static_cast<std::size_t>(a)];
  }
  return acc;
}

Rational SignedMeasure::real_of(const std::vector<int>& atoms) const {
  if (kind != ValueKind::Real)
    throw DomainError("SignedMeasure: real weights required");
  return of(atoms).re;
}

Value SignedMeasure::total() const {
  std::vector<int> all(static_cast<std::size_t>(n_atoms()));
  for (int i = 0; i < n_atoms(); ++i) all[static_cast<std::size_t>(i)] = i;
  return of(all);
}

Scalar total_variation(const SignedMeasure& mu, const PartitionAlgebra& P,
                       const std::vector<int>& A) {
  if (P.n_atoms() != mu.n_atoms())
    throw DomainError("total_variation: partition size mismatch");
  if (!P.measurable(A))
    throw DomainError("total_variation: set is not a union of cells");
  std::set<int> in(A.begin(), A.end());

  // On a finite atomic algebra the sup over refinements is attained at
  // the cell partition itself.
  bool exact = true;
  Rational exact_acc = 0;
  double approx_acc = 0;
  for (const auto& c : P.cells) {
    if (!in.count(c.front())) continue;
    NormEval e = value_norm(mu.of(c), mu.norm);
    approx_acc += e.approx;
    if (e.exact() && e.power == 1)
      exact_acc += *e.pow_val;
    else
      exact = false;
  }
  return exact ? Scalar(exact_acc) : Scalar::flt(approx_acc);
}

Scalar total_variation(const SignedMeasure& mu) {
  std::vector<int> all(static_cast<std::size_t>(mu.n_atoms()));
  for (int i = 0; i < mu.n_atoms(); ++i) all[static_cast<std::size_t>(i)] = i;
  return total_variation(mu, PartitionAlgebra::discrete(mu.n_atoms()), all);
}

JordanParts jordan_decompose(const SignedMeasure& mu) {
  if (!mu.is_real())
    throw DomainError("jordan_decompose: real weights required");
  std::vector<Rational> pos, neg;
  for (const Value& v : mu.weights) {
    Rational a = rat_abs(v.re);
    pos.push_back((a + v.re) / 2);
    neg.push_back((a - v.re) / 2);
  }
  return {SignedMeasure::real(mu.space, std::move(pos)),
          SignedMeasure::real(mu.space, std::move(neg))};
}

HahnParts hahn_decompose(const SignedMeasure& mu) {
  if (!mu.is_real())
    throw DomainError("hahn_decompose: real weights required");
  HahnParts h;
  for (int i = 0; i < mu.n_atoms(); ++i) {
    if (mu.weights[static_cast<std::size_t>(i)].re >= 0)
      h.P.push_back(i);
    else
      h.Q.push_back(i);
  }
  return h;
}

std::vector<Rational> radon_nikodym(const SignedMeasure& mu,
                                    const SignedMeasure& nu) {
  if (!nu.is_real() || !nu.nonneg())
    throw DomainError("radon_nikodym: nu must be a nonnegative real measure");
  if (!mu.is_real())
    throw DomainError("radon_nikodym: real weights required");
  if (mu.n_atoms() != nu.n_atoms())
    throw DomainError("radon_nikodym: atom count mismatch");
  std::vector<Rational> h;
  for (int i = 0; i < mu.n_atoms(); ++i) {
    const Rational& m = mu.weights[static_cast<std::size_t>(i)].re;
    const Rational& n = nu.weights[static_cast<std::size_t>(i)].re;
    if (n == 0) {
      if (m != 0)
        throw PreconditionError(
            "radon_nikodym: absolute continuity fails at atom '" +
            mu.space->labels[static_cast<std::size_t>(i)] + "'");
      h.push_back(0);
    } else {
      h.push_back(m / n);
    }
  }
  return h;
}

LebesgueParts lebesgue_decompose(const SignedMeasure& mu,
                                 const SignedMeasure& nu) {
  if (!nu.is_real() || !nu.nonneg())
    throw DomainError("lebesgue_decompose: nu must be a nonnegative real measure");
  if (!mu.is_real())
    throw DomainError("lebesgue_decompose: real weights required");
  if (mu.n_atoms() != nu.n_atoms())
    throw DomainError("lebesgue_decompose: atom count mismatch");
  std::vector<Rational> ac, sing, h;
  for (int i = 0; i < mu.n_atoms(); ++i) {
    const Rational& m = mu.weights[static_cast<std::size_t>(i)].re;
    const Rational& n = nu.weights[static_cast<std::size_t>(i)].re;
    if (n == 0) {
      sing.push_back(m);
      ac.push_back(0);
      h.push_back(0);
    } else {
      sing.push_back(0);
      ac.push_back(m);
      h.push_back(m / n);
    }
  }
  return {SignedMeasure::real(mu.space, std::move(ac)),
          SignedMeasure::real(mu.space, std::move(sing)), std::move(h)};
}

Rational symdiff_distance(const SignedMeasure& mu, const std::vector<int>& A,
                          const std::vector<int>& B) {
  if (!mu.nonneg())
    throw DomainError("symdiff_distance: mu must be nonnegative");
  std::set<int> a(A.begin(), A.end()), b(B.begin(), B.end());
  Rational d = 0;
  for (int i = 0; i < mu.n_atoms(); ++i)
    if (a.count(i) != b.count(i))
      d += mu.weights[static_cast<std::size_t>(i)].re;
  return d;
}

}  // namespace summa
