#include "summa/martingale.hpp"

#include "summa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace summa {

Filtration Filtration::make(std::shared_ptr<const AtomSpace> space,
                            std::vector<PartitionAlgebra> stages) {
  if (!space) throw DomainError("Filtration: null space");
  if (!space->base_weights)
    throw DomainError("Filtration: base weights required");
  Filtration f;
  f.space = std::move(space);
  const int n = f.space->size();
  for (std::size_t j = 0; j < stages.size(); ++j) {
    if (stages[j].n_atoms() != n)
      throw DomainError("Filtration: stage covers the wrong atom count");
    if (j > 0 && !stages[j - 1].refined_by(stages[j]))
      throw DomainError("Filtration: stage " + std::to_string(j + 1) +
                        " does not refine its predecessor");
    for (const auto& cell : stages[j].cells) {
      Rational m = 0;
      for (int a : cell) m += (*f.space->base_weights)[static_cast<std::size_t>(a)];
      if (m <= 0)
        throw DomainError("Filtration: cell of zero mass at stage " +
                          std::to_string(j + 1));
    }
  }
  f.stages = std::move(stages);
  return f;
}

Filtration Filtration::dyadic(int L, bool include_trivial) {
  if (L < 1 || L > 20) throw GuardError("Filtration::dyadic: L in 1..20");
  const int n = 1 << L;
  auto space = std::make_shared<AtomSpace>(AtomSpace::uniform(n));
  std::vector<PartitionAlgebra> stages;
  if (include_trivial) stages.push_back(PartitionAlgebra::trivial(n));
  for (int j = 1; j <= L; ++j) {
    std::vector<std::vector<int>> cells;
    const int block = 1 << (L - j);
    for (int c = 0; c < (1 << j); ++c) {
      std::vector<int> cell;
      for (int a = c * block; a < (c + 1) * block; ++a) cell.push_back(a);
      cells.push_back(std::move(cell));
    }
    stages.push_back(PartitionAlgebra::from_cells(std::move(cells), n));
  }
  return make(std::move(space), std::move(stages));
}

const PartitionAlgebra& Filtration::stage(int j) const {
  if (j < 1 || j > n_stages()) throw DomainError("Filtration: bad stage index");
  return stages[static_cast<std::size_t>(j - 1)];
}

Rational Filtration::atom_mass(int atom) const {
  return (*space->base_weights)[static_cast<std::size_t>(atom)];
}

Rational Filtration::set_mass(const std::vector<int>& atoms) const {
  Rational m = 0;
  for (int a : atoms) m += atom_mass(a);
  return m;
}

namespace {

void check_measurable(const Filtration& filt, const std::vector<Value>& f,
                      int stage) {
  if (static_cast<int>(f.size()) != filt.n_atoms())
    throw DomainError("AdaptedSequence: value count != atom count");
  for (const auto& cell : filt.stage(stage).cells) {
    const Value& v0 = f[static_cast<std::size_t>(cell.front())];
    for (int a : cell)
      if (!(f[static_cast<std::size_t>(a)] == v0))
        throw DomainError("AdaptedSequence: stage " + std::to_string(stage) +
                          " value is not constant on its cells");
  }
}

}  // namespace

AdaptedSequence AdaptedSequence::make(std::shared_ptr<const Filtration> f,
                                      std::vector<std::vector<Value>> values,
                                      NormDescriptor norm) {
  if (!f) throw DomainError("AdaptedSequence: null filtration");
  if (values.empty() || static_cast<int>(values.size()) > f->n_stages())
    throw DomainError("AdaptedSequence: stage count mismatch");
  AdaptedSequence seq;
  seq.filt = std::move(f);
  seq.norm = std::move(norm);
  seq.vkind = values.front().front().kind;
  for (std::size_t j = 0; j < values.size(); ++j) {
    check_measurable(*seq.filt, values[j], static_cast<int>(j + 1));
    for (const Value& v : values[j])
      if (v.kind != seq.vkind)
        throw DomainError("AdaptedSequence: mixed value kinds");
  }
  seq.values = std::move(values);
  return seq;
}

AdaptedSequence AdaptedSequence::from_final(std::shared_ptr<const Filtration> f,
                                            std::vector<Value> final_values,
                                            NormDescriptor norm) {
  if (!f) throw DomainError("AdaptedSequence: null filtration");
  std::vector<std::vector<Value>> values;
  for (int j = 1; j <= f->n_stages(); ++j)
    values.push_back(condition_to_stage(*f, final_values, j));
  return make(std::move(f), std::move(values), std::move(norm));
}

AdaptedSequence AdaptedSequence::dyadic_martingale(const DyadicStep& h) {
  // Stages run from the trivial partition down to the resolution of h,
  // so the first function is the constant E(h).
  auto filt = std::make_shared<Filtration>(Filtration::dyadic(h.level, true));
  std::vector<Value> final_values;
  for (const Rational& v : h.values) final_values.push_back(Value::real(v));
  return from_final(std::move(filt), std::move(final_values));
}

const std::vector<Value>& AdaptedSequence::stage(int j) const {
  if (j < 1 || j > n_stages())
    throw DomainError("AdaptedSequence: bad stage index");
  return values[static_cast<std::size_t>(j - 1)];
}

Rational AdaptedSequence::integral_norm(int j) const {
  if (vkind != ValueKind::Real)
    throw DomainError("integral_norm: real sequences only");
  Rational acc = 0;
  const auto& f = stage(j);
  for (int a = 0; a < filt->n_atoms(); ++a)
    acc += filt->atom_mass(a) * rat_abs(f[static_cast<std::size_t>(a)].re);
  return acc;
}

RootSum AdaptedSequence::norm_integral_rootsum(int j) const {
  RootSum s;
  const auto& f = stage(j);
  for (int a = 0; a < filt->n_atoms(); ++a) {
    NormEval e = value_norm(f[static_cast<std::size_t>(a)], norm);
    if (!e.exact())
      throw DomainError("norm_integral_rootsum: norm lacks an exact form");
    s.add(filt->atom_mass(a), *e.pow_val, static_cast<unsigned>(e.power));
  }
  return s;
}

std::vector<Value> condition_to_stage(const Filtration& filt,
                                      const std::vector<Value>& f, int j) {
  if (static_cast<int>(f.size()) != filt.n_atoms())
    throw DomainError("conditional_expectation: value count mismatch");
  std::vector<Value> out(f.size(), Value::zero_like(f.front()));
  for (const auto& cell : filt.stage(j).cells) {
    Rational mass = 0;
    Value acc = Value::zero_like(f.front());
    for (int a : cell) {
      mass += filt.atom_mass(a);
      acc += f[static_cast<std::size_t>(a)].scaled(filt.atom_mass(a));
    }
    Value avg = acc.scaled(Rational(1) / mass);
    for (int a : cell) out[static_cast<std::size_t>(a)] = avg;
  }
  return out;
}

std::vector<Value> conditional_expectation(const Filtration& filt,
                                           const std::vector<Value>& f,
                                           int from_stage, int to_stage) {
  if (to_stage > from_stage)
    throw DomainError("conditional_expectation: target stage must be coarser");
  check_measurable(filt, f, from_stage);
  return condition_to_stage(filt, f, to_stage);
}

ClassifyReport classify(const AdaptedSequence& seq) {
  ClassifyReport rep;
  const Filtration& filt = *seq.filt;
  bool all_eq = true, all_le = true, all_ge = true;
  for (int j = 1; j < seq.n_stages(); ++j) {
    std::vector<Value> cond = condition_to_stage(filt, seq.stage(j + 1), j);
    const auto& fj = seq.stage(j);
    for (int ci = 0; ci < static_cast<int>(filt.stage(j).cells.size()); ++ci) {
      int a = filt.stage(j).cells[static_cast<std::size_t>(ci)].front();
      const Value& lhs = fj[static_cast<std::size_t>(a)];
      const Value& rhs = cond[static_cast<std::size_t>(a)];
      bool eq = lhs == rhs;
      if (!eq && rep.witness_stage < 0) {
        rep.witness_stage = j;
        rep.witness_cell = ci;
      }
      all_eq &= eq;
      if (seq.vkind == ValueKind::Real) {
        all_le &= lhs.re <= rhs.re;
        all_ge &= lhs.re >= rhs.re;
      } else {
        all_le &= eq;
        all_ge &= eq;
      }
    }
  }
  if (all_eq) {
    rep.cls = SequenceClass::Martingale;
    rep.witness_stage = rep.witness_cell = -1;
  } else if (all_le) {
    rep.cls = SequenceClass::Submartingale;
  } else if (all_ge) {
    rep.cls = SequenceClass::Supermartingale;
  } else {
    rep.cls = SequenceClass::None;
  }
  switch (rep.cls) {
    case SequenceClass::Martingale: rep.detail = "martingale"; break;
    case SequenceClass::Submartingale: rep.detail = "submartingale"; break;
    case SequenceClass::Supermartingale: rep.detail = "supermartingale"; break;
    case SequenceClass::None: rep.detail = "none"; break;
  }
  return rep;
}

DoobParts doob_decompose(const AdaptedSequence& seq) {
  if (seq.vkind != ValueKind::Real)
    throw DomainError("doob_decompose: scalar submartingales only");
  ClassifyReport c = classify(seq);
  if (c.cls != SequenceClass::Submartingale && c.cls != SequenceClass::Martingale)
    throw PreconditionError("doob_decompose: not a submartingale");

  const Filtration& filt = *seq.filt;
  const int n = filt.n_atoms();
  std::vector<std::vector<Value>> mart, pred;
  std::vector<Value> A(static_cast<std::size_t>(n), Value::real(0));
  for (int j = 1; j <= seq.n_stages(); ++j) {
    if (j >= 2) {
      // a_{j-1} = E(f_j - f_{j-1} | B_{j-1}), accumulated into A_j.
      std::vector<Value> diff(static_cast<std::size_t>(n), Value::real(0));
      for (int a = 0; a < n; ++a)
        diff[static_cast<std::size_t>(a)] =
            seq.stage(j)[static_cast<std::size_t>(a)] -
            seq.stage(j - 1)[static_cast<std::size_t>(a)];
      std::vector<Value> inc = condition_to_stage(filt, diff, j - 1);
      for (int a = 0; a < n; ++a) A[static_cast<std::size_t>(a)] += inc[static_cast<std::size_t>(a)];
    }
    pred.push_back(A);
    std::vector<Value> m(static_cast<std::size_t>(n), Value::real(0));
    for (int a = 0; a < n; ++a)
      m[static_cast<std::size_t>(a)] =
          seq.stage(j)[static_cast<std::size_t>(a)] - A[static_cast<std::size_t>(a)];
    mart.push_back(std::move(m));
  }
  DoobParts parts{
      AdaptedSequence::make(seq.filt, std::move(mart), seq.norm),
      AdaptedSequence::make(seq.filt, std::move(pred), seq.norm)};
  return parts;
}

std::vector<NormEval> maximal_function(const AdaptedSequence& seq, int n) {
  if (n < 1 || n > seq.n_stages())
    throw DomainError("maximal_function: bad stage bound");
  const int atoms = seq.filt->n_atoms();
  std::vector<NormEval> out(static_cast<std::size_t>(atoms));
  for (int a = 0; a < atoms; ++a) {
    NormEval best;
    for (int j = 1; j <= n; ++j) {
      NormEval e = value_norm(seq.stage(j)[static_cast<std::size_t>(a)], seq.norm);
      if (j == 1 || norm_cmp(e, best) > 0) best = e;
    }
    out[static_cast<std::size_t>(a)] = best;
  }
  return out;
}

namespace {

// ||value|| > t, exact where possible.
bool norm_exceeds(const NormEval& e, const Rational& t) {
  if (t < 0) return true;
  if (e.exact()) return *e.pow_val > rat_pow(t, e.power);
  return e.approx > rat_dbl(t);
}

}  // namespace

WeakTypeReport weak_type_check(const AdaptedSequence& seq, const Rational& t) {
  if (t <= 0) throw DomainError("weak_type_check: t > 0 required");
  WeakTypeReport rep;
  const int n = seq.n_stages();
  std::vector<NormEval> fstar = maximal_function(seq, n);
  for (int a = 0; a < seq.filt->n_atoms(); ++a)
    if (norm_exceeds(fstar[static_cast<std::size_t>(a)], t))
      rep.level_set_mass += seq.filt->atom_mass(a);

  RootSum lhs;
  lhs.add_rational(t * rep.level_set_mass);
  RootSum best;
  double best_approx = -1;
  for (int j = 1; j <= n; ++j) {
    RootSum s = seq.norm_integral_rootsum(j);
    double v = s.approx();
    if (v > best_approx) {
      best_approx = v;
      best = s;
    }
  }
  rep.lhs = rat_dbl(t * rep.level_set_mass);
  rep.rhs = best_approx;
  RootSum::Cmp cmp = RootSum::compare(lhs, best);
  rep.certified = cmp != RootSum::Cmp::UNDECIDED;
  rep.holds = cmp == RootSum::Cmp::LT || cmp == RootSum::Cmp::EQ ||
              (!rep.certified && rep.lhs <= rep.rhs + tolerance());
  return rep;
}

DoobLpReport doob_lp_check(const AdaptedSequence& seq, const Exponent& p) {
  if (p.is_inf() || p.value() <= 1)
    throw DomainError("doob_lp_check: finite p > 1 required");
  if (seq.vkind != ValueKind::Real)
    throw DomainError("doob_lp_check: nonnegative scalar submartingales only");
  for (int j = 1; j <= seq.n_stages(); ++j)
    for (const Value& v : seq.stage(j))
      if (v.re < 0)
        throw PreconditionError("doob_lp_check: sequence must be nonnegative");
  ClassifyReport c = classify(seq);
  if (c.cls != SequenceClass::Submartingale && c.cls != SequenceClass::Martingale)
    throw PreconditionError("doob_lp_check: not a submartingale");

  const int n = seq.n_stages();
  std::vector<NormEval> fstar = maximal_function(seq, n);
  DoobLpReport rep;

  if (p.exact()) {
    const Rational pr = *p.exact();
    const BigInt u = numerator(pr), v = denominator(pr);
    const unsigned root = v.convert_to<unsigned>();
    const long un = u.convert_to<long>(), vn = v.convert_to<long>();
    // C = p 2^(p-1) / (p-1) = [u / (u-v)] * 2^((u-v)/v); the dyadic factor
    // folds into each radicand as 2^(u-v).
    const Rational lead = Rational(u, u - v);
    const Rational two_pow = rat_pow(Rational(2), un - vn);

    RootSum lhs, rhs;
    double dl = 0, dr = 0, dbase = 0;
    for (int a = 0; a < seq.filt->n_atoms(); ++a) {
      const Rational w = seq.filt->atom_mass(a);
      const Rational xs = *fstar[static_cast<std::size_t>(a)].pow_val;  // power 1 (real)
      const Rational xn = seq.stage(n)[static_cast<std::size_t>(a)].re;
      lhs.add(w, rat_pow(xs, un), root);
      rhs.add(w * lead, two_pow * rat_pow(xn, un), root);
      dl += rat_dbl(w) * std::pow(rat_dbl(xs), p.value());
      dbase += rat_dbl(w) * std::pow(rat_dbl(xn), p.value());
    }
    dr = dbase * p.value() * std::pow(2.0, p.value() - 1) / (p.value() - 1);
    rep.lhs = dl;
    rep.rhs = dr;
    rep.constant = p.value() * std::pow(2.0, p.value() - 1) / (p.value() - 1);
    rep.ratio = dbase > 0 ? dl / dbase : 0;
    RootSum::Cmp cmp = RootSum::compare(lhs, rhs);
    rep.certified = cmp != RootSum::Cmp::UNDECIDED;
    rep.holds = cmp == RootSum::Cmp::LT || cmp == RootSum::Cmp::EQ;
    if (!rep.certified) rep.holds = dl <= dr + tolerance();
    return rep;
  }

  double dl = 0, dbase = 0;
  for (int a = 0; a < seq.filt->n_atoms(); ++a) {
    double w = rat_dbl(seq.filt->atom_mass(a));
    dl += w * std::pow(fstar[static_cast<std::size_t>(a)].approx, p.value());
    dbase += w * std::pow(rat_dbl(seq.stage(n)[static_cast<std::size_t>(a)].re),
                          p.value());
  }
  rep.constant = p.value() * std::pow(2.0, p.value() - 1) / (p.value() - 1);
  rep.lhs = dl;
  rep.rhs = rep.constant * dbase;
  rep.ratio = dbase > 0 ? dl / dbase : 0;
  rep.holds = rep.lhs <= rep.rhs + tolerance();
  return rep;
}

StoppingTime StoppingTime::make(const Filtration& filt, std::vector<int> tau) {
  if (static_cast<int>(tau.size()) != filt.n_atoms())
    throw DomainError("StoppingTime: value count != atom count");
  const int N = filt.n_stages();
  for (int v : tau)
    if (v != kInf && (v < 1 || v > N))
      throw DomainError("StoppingTime: values must lie in 1..N or infinity");
  // {tau <= n} must be a union of stage-n cells.
  for (int n = 1; n <= N; ++n) {
    for (const auto& cell : filt.stage(n).cells) {
      bool first = tau[static_cast<std::size_t>(cell.front())] <= n;
      for (int a : cell)
        if ((tau[static_cast<std::size_t>(a)] <= n) != first)
          throw DomainError("StoppingTime: {tau <= " + std::to_string(n) +
                            "} is not stage-" + std::to_string(n) +
                            " measurable");
    }
  }
  StoppingTime t;
  t.tau = std::move(tau);
  return t;
}

StoppingTime StoppingTime::constant(const Filtration& filt, int n) {
  return make(filt, std::vector<int>(static_cast<std::size_t>(filt.n_atoms()), n));
}

StoppingTime StoppingTime::first_passage(const AdaptedSequence& seq,
                                         const Rational& threshold) {
  const int atoms = seq.filt->n_atoms();
  std::vector<int> tau(static_cast<std::size_t>(atoms), kInf);
  for (int a = 0; a < atoms; ++a) {
    for (int j = 1; j <= seq.n_stages(); ++j) {
      NormEval e = value_norm(seq.stage(j)[static_cast<std::size_t>(a)], seq.norm);
      if (norm_exceeds(e, threshold)) {
        tau[static_cast<std::size_t>(a)] = j;
        break;
      }
    }
  }
  return make(*seq.filt, std::move(tau));
}

StoppingTime StoppingTime::truncated(int N) const {
  StoppingTime t = *this;
  for (int& v : t.tau) v = v == kInf ? N : std::min(v, N);
  return t;
}

bool StoppingTime::finite() const {
  return std::all_of(tau.begin(), tau.end(), [](int v) { return v != kInf; });
}

int StoppingTime::max_finite() const {
  int m = 0;
  for (int v : tau)
    if (v != kInf) m = std::max(m, v);
  return m;
}

StopResult stop(const AdaptedSequence& seq, const StoppingTime& tau,
                bool restrict_to_finite) {
  if (!tau.finite() && !restrict_to_finite)
    throw PreconditionError(
        "stop: tau takes the value infinity; pass restrict_to_finite");
  const int atoms = seq.filt->n_atoms();
  StopResult res;
  res.stopped.assign(static_cast<std::size_t>(atoms),
                     Value::zero_like(seq.stage(1).front()));
  res.defined.assign(static_cast<std::size_t>(atoms), false);
  for (int a = 0; a < atoms; ++a) {
    int n = tau.tau[static_cast<std::size_t>(a)];
    if (n == StoppingTime::kInf) continue;
    res.stopped[static_cast<std::size_t>(a)] =
        seq.stage(n)[static_cast<std::size_t>(a)];
    res.defined[static_cast<std::size_t>(a)] = true;
  }
  // B_tau is generated by the classes {tau = n} intersected with stage-n
  // cells.
  std::vector<std::vector<int>> cellmaps;
  for (int j = 1; j <= seq.filt->n_stages(); ++j)
    cellmaps.push_back(seq.filt->stage(j).atom_to_cell());
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int a = 0; a < atoms; ++a) {
    int n = tau.tau[static_cast<std::size_t>(a)];
    if (n == StoppingTime::kInf) continue;
    classes[{n, cellmaps[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(a)]}]
        .push_back(a);
  }
  for (auto& [key, atoms_in] : classes) res.classes.push_back(atoms_in);
  return res;
}

AdaptedSequence stopped_sequence(const AdaptedSequence& seq,
                                 const StoppingTime& tau) {
  const int atoms = seq.filt->n_atoms();
  std::vector<std::vector<Value>> values;
  for (int nstage = 1; nstage <= seq.n_stages(); ++nstage) {
    std::vector<Value> g(static_cast<std::size_t>(atoms),
                         Value::zero_like(seq.stage(1).front()));
    for (int a = 0; a < atoms; ++a) {
      int n = std::min(tau.tau[static_cast<std::size_t>(a)], nstage);
      g[static_cast<std::size_t>(a)] = seq.stage(n)[static_cast<std::size_t>(a)];
    }
    values.push_back(std::move(g));
  }
  return AdaptedSequence::make(seq.filt, std::move(values), seq.norm);
}

OptionalStoppingReport optional_stopping_check(const AdaptedSequence& seq,
                                               const StoppingTime& tau) {
  if (!tau.finite())
    throw PreconditionError("optional_stopping_check: tau must be bounded");
  ClassifyReport c = classify(seq);
  if (c.cls != SequenceClass::Martingale)
    throw PreconditionError("optional_stopping_check: martingale required");
  const int N = seq.n_stages();
  if (tau.max_finite() > N)
    throw PreconditionError("optional_stopping_check: tau exceeds the stages");

  StopResult stopped = stop(seq, tau);
  OptionalStoppingReport rep;
  rep.holds = true;
  for (const auto& cls : stopped.classes) {
    Value lhs = Value::zero_like(seq.stage(1).front());
    Value rhs = lhs;
    for (int a : cls) {
      lhs += stopped.stopped[static_cast<std::size_t>(a)].scaled(
          seq.filt->atom_mass(a));
      rhs += seq.stage(N)[static_cast<std::size_t>(a)].scaled(
          seq.filt->atom_mass(a));
    }
    ++rep.classes_checked;
    if (!(lhs == rhs)) {
      rep.holds = false;
      rep.witness = "class of " + std::to_string(cls.size()) +
                    " atoms starting at atom " + std::to_string(cls.front());
      return rep;
    }
  }
  return rep;
}

std::vector<std::pair<double, double>> uniform_integrability_profile(
    const AdaptedSequence& seq, const std::vector<Rational>& t_grid) {
  std::vector<std::pair<double, double>> out;
  for (const Rational& t : t_grid) {
    double worst = 0;
    for (int j = 1; j <= seq.n_stages(); ++j) {
      double acc = 0;
      for (int a = 0; a < seq.filt->n_atoms(); ++a) {
        NormEval e = value_norm(seq.stage(j)[static_cast<std::size_t>(a)], seq.norm);
        if (norm_exceeds(e, t))
          acc += rat_dbl(seq.filt->atom_mass(a)) * e.approx;
      }
      worst = std::max(worst, acc);
    }
    out.push_back({rat_dbl(t), worst});
  }
  return out;
}

}  // namespace summa
