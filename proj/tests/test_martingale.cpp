#include <doctest.h>

#include "summa/errors.hpp"
#include "summa/martingale.hpp"
#include "summa/rng.hpp"

using namespace summa;

namespace {

std::shared_ptr<Filtration> pair_filtration() {
  // uniform 4 atoms, one stage: {{0,1},{2,3}}, then discrete
  auto sp = std::make_shared<AtomSpace>(AtomSpace::uniform(4));
  return std::make_shared<Filtration>(Filtration::make(
      sp, {PartitionAlgebra::from_cells({{0, 1}, {2, 3}}, 4),
           PartitionAlgebra::discrete(4)}));
}

std::vector<Value> reals(std::vector<Rational> v) {
  std::vector<Value> out;
  for (Rational& r : v) out.push_back(Value::real(std::move(r)));
  return out;
}

}  // namespace

TEST_CASE("conditional expectation pair averages") {
  auto filt = pair_filtration();
  std::vector<Value> f = reals({1, 3, 5, 7});
  std::vector<Value> e = conditional_expectation(*filt, f, 2, 1);
  CHECK(e[0].re == 2);
  CHECK(e[1].re == 2);
  CHECK(e[2].re == 6);
  CHECK(e[3].re == 6);

  // constant functions are fixed points
  std::vector<Value> c = reals({5, 5, 5, 5});
  CHECK(conditional_expectation(*filt, c, 2, 1)[0].re == 5);

  CHECK_THROWS_AS(conditional_expectation(*filt, f, 1, 2), DomainError);
}

TEST_CASE("dyadic conditional expectation example") {
  // E of 4 * 1_[0,1/4) down to level 1 is 2 * 1_[0,1/2)
  AdaptedSequence seq =
      AdaptedSequence::dyadic_martingale(DyadicStep::from_values(2, {4, 0, 0, 0}));
  // stages: trivial, level 1, level 2
  REQUIRE(seq.n_stages() == 3);
  CHECK(seq.stage(1)[0].re == 1);  // the mean
  CHECK(seq.stage(2)[0].re == 2);
  CHECK(seq.stage(2)[1].re == 2);
  CHECK(seq.stage(2)[2].re == 0);
  CHECK(seq.stage(3)[0].re == 4);
}

TEST_CASE("classify") {
  auto filt = pair_filtration();
  // conditional expectations of a fixed function form a martingale
  AdaptedSequence mart = AdaptedSequence::from_final(filt, reals({1, 3, 5, 7}));
  CHECK(classify(mart).cls == SequenceClass::Martingale);

  // f_j = j: strictly increasing constants
  AdaptedSequence inc = AdaptedSequence::make(
      filt, {reals({1, 1, 1, 1}), reals({2, 2, 2, 2})});
  CHECK(classify(inc).cls == SequenceClass::Submartingale);

  AdaptedSequence dec = AdaptedSequence::make(
      filt, {reals({2, 2, 2, 2}), reals({1, 1, 1, 1})});
  CHECK(classify(dec).cls == SequenceClass::Supermartingale);

  // one cell drifts up, the other down: neither sub nor super
  AdaptedSequence none = AdaptedSequence::make(
      filt, {reals({1, 1, 5, 5}), reals({4, 0, 4, 4})});
  ClassifyReport r = classify(none);
  CHECK(r.cls == SequenceClass::None);
  CHECK(r.witness_stage == 1);

  // the norm of a vector martingale is a submartingale
  std::vector<Value> vfinal;
  Rng rng(3);
  for (int a = 0; a < 4; ++a)
    vfinal.push_back(Value::vector({rng.rational(-5, 5, 3), rng.rational(-5, 5, 3)}));
  AdaptedSequence vmart =
      AdaptedSequence::from_final(filt, vfinal, NormDescriptor::l1());
  std::vector<std::vector<Value>> normed;
  for (int j = 1; j <= vmart.n_stages(); ++j) {
    std::vector<Value> row;
    for (const Value& v : vmart.stage(j))
      row.push_back(Value::real(*value_norm(v, vmart.norm).pow_val));
    normed.push_back(std::move(row));
  }
  AdaptedSequence normseq = AdaptedSequence::make(filt, std::move(normed));
  ClassifyReport nr = classify(normseq);
  CHECK((nr.cls == SequenceClass::Submartingale || nr.cls == SequenceClass::Martingale));
}

TEST_CASE("doob_decompose") {
  auto filt = pair_filtration();
  AdaptedSequence mart = AdaptedSequence::from_final(filt, reals({1, 3, 5, 7}));
  DoobParts p = doob_decompose(mart);
  for (int j = 1; j <= 2; ++j)
    for (int a = 0; a < 4; ++a)
      CHECK(p.predictable.stage(j)[static_cast<std::size_t>(a)].re == 0);

  // f_j = j: martingale part constant, A_l = l - 1
  AdaptedSequence inc = AdaptedSequence::make(
      filt, {reals({1, 1, 1, 1}), reals({2, 2, 2, 2})});
  DoobParts q = doob_decompose(inc);
  CHECK(q.predictable.stage(1)[0].re == 0);
  CHECK(q.predictable.stage(2)[0].re == 1);
  CHECK(classify(q.martingale).cls == SequenceClass::Martingale);

  // |dyadic martingale| of a sign-changing density has a nontrivial
  // compensator; reconstruction exact
  AdaptedSequence dy =
      AdaptedSequence::dyadic_martingale(DyadicStep::from_values(2, {4, -4, 0, 0}));
  std::vector<std::vector<Value>> absv;
  for (int j = 1; j <= dy.n_stages(); ++j) {
    std::vector<Value> row;
    for (const Value& v : dy.stage(j)) row.push_back(Value::real(rat_abs(v.re)));
    absv.push_back(std::move(row));
  }
  AdaptedSequence sub = AdaptedSequence::make(dy.filt, std::move(absv));
  REQUIRE(classify(sub).cls == SequenceClass::Submartingale);
  DoobParts r = doob_decompose(sub);
  bool nontrivial = false;
  for (int j = 1; j <= sub.n_stages(); ++j)
    for (const Value& v : r.predictable.stage(j)) nontrivial |= v.re != 0;
  CHECK(nontrivial);
  for (int j = 1; j <= sub.n_stages(); ++j)
    for (int a = 0; a < sub.filt->n_atoms(); ++a)
      CHECK(r.martingale.stage(j)[static_cast<std::size_t>(a)].re +
                r.predictable.stage(j)[static_cast<std::size_t>(a)].re ==
            sub.stage(j)[static_cast<std::size_t>(a)].re);

  CHECK_THROWS_AS(doob_decompose(AdaptedSequence::make(
                      filt, {reals({2, 2, 2, 2}), reals({1, 1, 1, 1})})),
                  PreconditionError);
}

TEST_CASE("maximal function of the density-4 example") {
  AdaptedSequence seq =
      AdaptedSequence::dyadic_martingale(DyadicStep::from_values(2, {4, 0, 0, 0}));
  std::vector<NormEval> fstar = maximal_function(seq, seq.n_stages());
  CHECK(*fstar[0].pow_val == 4);  // [0, 1/4)
  CHECK(*fstar[1].pow_val == 2);  // [1/4, 1/2)
  CHECK(*fstar[2].pow_val == 1);  // [1/2, 1)
  CHECK(*fstar[3].pow_val == 1);

  // single stage reduces to |f_1|
  std::vector<NormEval> one = maximal_function(seq, 1);
  CHECK(*one[0].pow_val == 1);
}

TEST_CASE("weak_type_check") {
  AdaptedSequence seq =
      AdaptedSequence::dyadic_martingale(DyadicStep::from_values(2, {4, 0, 0, 0}));
  WeakTypeReport r = weak_type_check(seq, 1);
  CHECK(r.level_set_mass == Rational(1, 2));
  CHECK(r.holds);
  CHECK(r.certified);

  AdaptedSequence zero =
      AdaptedSequence::dyadic_martingale(DyadicStep::from_values(1, {0, 0}));
  WeakTypeReport z = weak_type_check(zero, 1);
  CHECK(z.level_set_mass == 0);
  CHECK(z.holds);
}

TEST_CASE("doob_lp_check exact comparisons") {
  AdaptedSequence seq =
      AdaptedSequence::dyadic_martingale(DyadicStep::from_values(2, {4, 0, 0, 0}));
  DoobLpReport r2 = doob_lp_check(seq, Exponent(2));
  // f* = (4,2,1,1): int (f*)^2 = 16/4 + 4/4 + 1/2 = 11/2; 4 * int f^2 = 16
  CHECK(r2.lhs == doctest::Approx(5.5));
  CHECK(r2.rhs == doctest::Approx(16.0));
  CHECK(r2.holds);
  CHECK(r2.certified);

  DoobLpReport r32 = doob_lp_check(seq, Exponent(Rational(3, 2)));
  CHECK(r32.holds);
  CHECK(r32.certified);
  CHECK(r32.constant == doctest::Approx(3.0 * std::sqrt(2.0)));

  // constant sequences: ratio 1, still below the constant
  AdaptedSequence c =
      AdaptedSequence::dyadic_martingale(DyadicStep::from_values(1, {3, 3}));
  DoobLpReport rc = doob_lp_check(c, Exponent(2));
  CHECK(rc.ratio == doctest::Approx(1.0));
  CHECK(rc.holds);

  CHECK_THROWS_AS(doob_lp_check(seq, Exponent(1.0)), DomainError);
}

TEST_CASE("stopping times") {
  AdaptedSequence seq =
      AdaptedSequence::dyadic_martingale(DyadicStep::from_values(2, {4, 0, 0, 0}));
  const Filtration& filt = *seq.filt;

  // constant stopping time: f_tau = f_n, B_tau = stage algebra
  StoppingTime two = StoppingTime::constant(filt, 2);
  StopResult r2 = stop(seq, two);
  for (int a = 0; a < 4; ++a)
    CHECK(r2.stopped[static_cast<std::size_t>(a)] ==
          seq.stage(2)[static_cast<std::size_t>(a)]);
  CHECK(r2.classes.size() == filt.stage(2).cells.size());

  // first passage above 1: hits at stage 2 on [0,1/2), never elsewhere
  StoppingTime fp = StoppingTime::first_passage(seq, 1);
  CHECK(fp.tau[0] == 2);
  CHECK(fp.tau[1] == 2);
  CHECK(fp.tau[2] == StoppingTime::kInf);
  CHECK(fp.tau[3] == StoppingTime::kInf);
  CHECK_THROWS_AS(stop(seq, fp), PreconditionError);
  StopResult rr = stop(seq, fp, true);
  CHECK(rr.defined[0]);
  CHECK(!rr.defined[2]);

  // truncation is always a valid stopping time
  StoppingTime trunc = fp.truncated(seq.n_stages());
  CHECK(trunc.finite());
  OptionalStoppingReport os = optional_stopping_check(seq, trunc);
  CHECK(os.holds);

  // a non-measurable map is rejected
  CHECK_THROWS_AS(StoppingTime::make(filt, {1, 2, 2, 2}), DomainError);

  // stopped sequences stay martingales
  AdaptedSequence g = stopped_sequence(seq, trunc);
  CHECK(classify(g).cls == SequenceClass::Martingale);
}

TEST_CASE("optional stopping on random instances") {
  Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    int lev = static_cast<int>(rng.range(1, 3));
    std::vector<Rational> dens;
    for (long c = 0; c < (1L << lev); ++c) dens.push_back(rng.rational(-6, 6, 4));
    AdaptedSequence seq =
        AdaptedSequence::dyadic_martingale(DyadicStep::from_values(lev, dens));
    StoppingTime tau =
        StoppingTime::first_passage(seq, rng.rational(1, 4, 2))
            .truncated(seq.n_stages());
    OptionalStoppingReport rep = optional_stopping_check(seq, tau);
    REQUIRE(rep.holds);
    // int f_tau = int f_1
    StopResult sr = stop(seq, tau);
    Rational itau = 0, i1 = 0;
    for (int a = 0; a < seq.filt->n_atoms(); ++a) {
      itau += seq.filt->atom_mass(a) * sr.stopped[static_cast<std::size_t>(a)].re;
      i1 += seq.filt->atom_mass(a) * seq.stage(1)[static_cast<std::size_t>(a)].re;
    }
    REQUIRE(itau == i1);
  }
}

TEST_CASE("experiments") {
  ExperimentTrace dirac = run_experiment("dirac_singular", {{"stages", "6"}});
  CHECK(dirac.assertions_hold);
  REQUIRE(dirac.rows.size() == 6);
  for (const auto& row : dirac.rows) CHECK(row[1] == "1");  // L1 column

  ExperimentTrace sq = run_experiment("unit_square", {{"stages", "3"}});
  CHECK(sq.assertions_hold);
  for (const auto& row : sq.rows) CHECK(row[1] == "1");  // integral column

  ExperimentTrace slln = run_experiment("slln_average", {{"n", "64"}});
  CHECK(slln.assertions_hold);
  CHECK(slln.rows.back()[1] == "1/64");  // ||f_64||_2^2 = 1/64 exactly

  ExperimentTrace dbl = run_experiment("doubling", {{"stages", "5"}});
  CHECK(dbl.assertions_hold);

  CHECK_THROWS_AS(run_experiment("unknown", {}), DomainError);
}

TEST_CASE("filtration validation") {
  auto sp = std::make_shared<AtomSpace>(AtomSpace::uniform(4));
  // non-refining chain rejected
  CHECK_THROWS_AS(
      Filtration::make(sp, {PartitionAlgebra::from_cells({{0, 1}, {2, 3}}, 4),
                            PartitionAlgebra::from_cells({{0, 2}, {1, 3}}, 4)}),
      DomainError);
  // null-mass cells rejected
  auto bad = std::make_shared<AtomSpace>(AtomSpace::weighted(
      {"x", "y"}, {Rational(1), Rational(0)}));
  CHECK_THROWS_AS(Filtration::make(bad, {PartitionAlgebra::discrete(2)}),
                  DomainError);
  // non-adapted values rejected
  auto filt = pair_filtration();
  CHECK_THROWS_AS(AdaptedSequence::make(*&filt, {reals({1, 2, 3, 4})}),
                  DomainError);
}
