#include <doctest.h>

#include "summa/errors.hpp"
#include "summa/rng.hpp"
#include "summa/unordered.hpp"

#include <cmath>

using namespace summa;

namespace {

// Independent oracle: direct max over all nonempty subsets by index sets.
Rational brute_y_real(const std::vector<Rational>& t) {
  Rational best = 0;
  const int m = static_cast<int>(t.size());
  for (int mask = 1; mask < (1 << m); ++mask) {
    Rational s = 0;
    for (int j = 0; j < m; ++j)
      if (mask >> j & 1) s += t[static_cast<std::size_t>(j)];
    best = std::max(best, rat_abs(s));
  }
  return best;
}

Rational brute_z_real(const std::vector<Rational>& t) {
  const int m = static_cast<int>(t.size());
  Rational best = 0;
  std::vector<int> state(static_cast<std::size_t>(m), 0);
  // odometer over {-1, 0, +1}^m
  long total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  for (long code = 1; code < total; ++code) {
    long c = code;
    Rational s = 0;
    for (int j = 0; j < m; ++j) {
      int dig = static_cast<int>(c % 3);
      c /= 3;
      if (dig == 1) s += t[static_cast<std::size_t>(j)];
      if (dig == 2) s -= t[static_cast<std::size_t>(j)];
    }
    best = std::max(best, rat_abs(s));
  }
  return best;
}

}  // namespace

TEST_CASE("subset_sum examples") {
  IndexedFamily F = IndexedFamily::finite_real({1, -2, 3});
  CHECK(subset_sum(F, {1, 3}).re == 4);
  CHECK(subset_sum(F, {}).re == 0);
  IndexedFamily V = IndexedFamily::finite_vector({{1, 0}, {0, 1}},
                                                 NormDescriptor::l2());
  Value s = subset_sum(V, {1, 2});
  CHECK(s.vec[0] == 1);
  CHECK(s.vec[1] == 1);
  CHECK_THROWS_AS(subset_sum(F, {4}), DomainError);
}

TEST_CASE("y_norm against the enumeration oracle") {
  IndexedFamily F = IndexedFamily::finite_real({1, -2, 3});
  CHECK(*y_norm(F).eval.pow_val == 4);
  CHECK(*y_norm(F).eval.pow_val == brute_y_real({1, -2, 3}));

  IndexedFamily single = IndexedFamily::finite_real({Rational(-7, 3)});
  CHECK(*y_norm(single).eval.pow_val == Rational(7, 3));

  IndexedFamily pos = IndexedFamily::finite_real({1, 1, 1});
  CHECK(*y_norm(pos).eval.pow_val == 3);
  CHECK(y_norm(pos).argmax == std::vector<long>{1, 2, 3});

  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> t;
    int m = static_cast<int>(rng.range(1, 8));
    for (int k = 0; k < m; ++k) t.push_back(rng.rational(-9, 9, 4));
    CHECK(*y_norm(IndexedFamily::finite_real(t)).eval.pow_val == brute_y_real(t));
  }
}

TEST_CASE("z_norm scalar collapse and enumeration") {
  IndexedFamily F = IndexedFamily::finite_real({1, -2, 3});
  CHECK(*z_norm(F).eval.pow_val == 6);

  // singleton vector family
  IndexedFamily single =
      IndexedFamily::finite_vector({{3, 4}}, NormDescriptor::l2());
  CHECK(z_norm(single).norm.dbl() == doctest::Approx(5.0));

  // basis pair under linf: every signed sum has norm 1
  IndexedFamily basis = IndexedFamily::finite_vector({{1, 0}, {0, 1}},
                                                     NormDescriptor::linf());
  CHECK(*z_norm(basis).eval.pow_val == 1);

  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> t;
    int m = static_cast<int>(rng.range(1, 7));
    for (int k = 0; k < m; ++k) t.push_back(rng.rational(-9, 9, 4));
    CHECK(*z_norm(IndexedFamily::finite_real(t)).eval.pow_val == brute_z_real(t));
  }
}

TEST_CASE("w_norm on root-of-unity grids") {
  // beta = (1, -i) aligns phases: |1 + (-i)(i)| = 2
  IndexedFamily F = IndexedFamily::finite_complex({{1, 0}, {0, 1}});
  CHECK(w_norm(F, 4).norm.dbl() == doctest::Approx(2.0));

  IndexedFamily single = IndexedFamily::finite_complex({{3, 4}});
  for (int K : {2, 4, 8, 16})
    CHECK(w_norm(single, K).norm.dbl() == doctest::Approx(5.0));

  IndexedFamily pm = IndexedFamily::finite_complex({{1, 0}, {-1, 0}});
  CHECK(w_norm(pm, 2).norm.dbl() == doctest::Approx(2.0));

  // against brute enumeration over assignments for small K, m
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    int m = static_cast<int>(rng.range(1, 5));
    std::vector<std::pair<Rational, Rational>> t;
    for (int k = 0; k < m; ++k)
      t.push_back({rng.rational(-5, 5, 3), rng.rational(-5, 5, 3)});
    IndexedFamily G = IndexedFamily::finite_complex(t);
    for (int K : {2, 4, 8}) {
      double direct = 0;
      long total = 1;
      for (int k = 0; k < m; ++k) total *= K;
      for (long code = 0; code < total; ++code) {
        long c = code;
        double re = 0, im = 0;
        for (int k = 0; k < m; ++k) {
          int r = static_cast<int>(c % K);
          c /= K;
          double th = 2 * M_PI * r / K;
          double a = rat_dbl(t[static_cast<std::size_t>(k)].first);
          double b = rat_dbl(t[static_cast<std::size_t>(k)].second);
          re += a * std::cos(th) - b * std::sin(th);
          im += a * std::sin(th) + b * std::cos(th);
        }
        direct = std::max(direct, std::hypot(re, im));
      }
      CHECK(w_norm(G, K).norm.dbl() == doctest::Approx(direct).epsilon(1e-9));
    }
  }

  CHECK_THROWS_AS(w_norm(IndexedFamily::finite_real({1}), 4), DomainError);
  CHECK_THROWS_AS(w_norm(F, 1), DomainError);
}

TEST_CASE("generalized Cauchy criterion") {
  // geometric: tail 2^-4 = 1/16 < 1/10, and 2^-3 = 1/8 > 1/10
  IndexedFamily geo = IndexedFamily::geometric(Rational(1, 2), 1, 64);
  CauchyVerdict v = generalized_cauchy_check(geo, Scalar(Rational(1, 10)), 64);
  REQUIRE(v.status == CauchyVerdict::Status::Pass);
  CHECK(v.prefix == 4);

  // alternating harmonic at eps = 1/2 fails with a same-sign block witness
  IndexedFamily alt = IndexedFamily::alternating_harmonic(4096);
  CauchyVerdict f = generalized_cauchy_check(alt, Scalar(Rational(1, 2)), 4096);
  REQUIRE(f.status == CauchyVerdict::Status::Fail);
  REQUIRE(!f.witness.empty());
  Rational s = 0;
  for (long j : f.witness) {
    CHECK(j > f.witness_refutes_prefix);
    s += alt.term(j).re;
  }
  CHECK(rat_abs(s) >= Rational(1, 2));

  // all-zero family passes with the empty prefix
  IndexedFamily z = IndexedFamily::zeros(16);
  CauchyVerdict zv = generalized_cauchy_check(z, Scalar(Rational(1, 100)), 16);
  CHECK(zv.status == CauchyVerdict::Status::Pass);
  CHECK(zv.prefix == 0);

  // streamed family without a tail certificate cannot pass
  IndexedFamily alt2 = IndexedFamily::alternating_harmonic(64);
  CauchyVerdict iv = generalized_cauchy_check(alt2, Scalar(Rational(10)), 64);
  CHECK(iv.status == CauchyVerdict::Status::Inconclusive);
}

TEST_CASE("unordered_sum_eval") {
  IndexedFamily geo = IndexedFamily::geometric(Rational(1, 2), 1, 64);
  SumResult r = unordered_sum_eval(geo, Scalar(Rational(1, 1000000)));
  // sum of 2^-j for j = 1..prefix is 1 - 2^-prefix
  CHECK(rat_abs(r.value.re - 1) < Rational(1, 1000000));
  CHECK(r.terms_used == 20);

  SumResult z = unordered_sum_eval(IndexedFamily::zeros(8), Scalar(Rational(1, 100)));
  CHECK(z.value.re == 0);

  SumResult s = unordered_sum_eval(IndexedFamily::finite_real({5}),
                                   Scalar(Rational(1, 100)));
  CHECK(s.value.re == 5);

  CHECK_THROWS_AS(unordered_sum_eval(IndexedFamily::alternating_harmonic(256),
                                     Scalar(Rational(1, 2))),
                  PreconditionError);
}

TEST_CASE("rearrangement_test") {
  IndexedFamily F = IndexedFamily::finite_real({1, -2, 3});
  RearrangementReport r = rearrangement_test(F, {3, 1, 2}, Scalar(Rational(1)));
  CHECK(r.exact);
  CHECK(r.agree);
  CHECK(r.sum.re == 2);
  CHECK(r.permuted_sum.re == 2);

  CHECK_THROWS_AS(rearrangement_test(F, {1, 1, 2}, Scalar(Rational(1))),
                  DomainError);

  // adjacent swaps on a streamed geometric family agree within 2 eps
  IndexedFamily geo = IndexedFamily::geometric(Rational(1, 2), 1, 64);
  std::vector<long> swap(64);
  for (long j = 0; j < 64; j += 2) {
    swap[static_cast<std::size_t>(j)] = j + 2;
    swap[static_cast<std::size_t>(j + 1)] = j + 1;
  }
  RearrangementReport g =
      rearrangement_test(geo, swap, Scalar(Rational(1, 1000000)));
  CHECK(g.agree);

  // identity permutation always agrees
  std::vector<long> id(64);
  for (long j = 0; j < 64; ++j) id[static_cast<std::size_t>(j)] = j + 1;
  CHECK(rearrangement_test(geo, id, Scalar(Rational(1, 1000))).agree);

  // witness mode: a failing family produces a divergent rearrangement
  IndexedFamily alt = IndexedFamily::alternating_harmonic(4096);
  std::vector<long> id2(4096);
  for (long j = 0; j < 4096; ++j) id2[static_cast<std::size_t>(j)] = j + 1;
  RearrangementReport w = rearrangement_test(alt, id2, Scalar(Rational(1, 2)));
  CHECK(!w.agree);
  REQUIRE(w.divergent_prefix.has_value());
  REQUIRE(!w.block_norms.empty());
  for (double bn : w.block_norms) CHECK(bn >= 0.5 - 1e-12);
}

TEST_CASE("sign_uniform_convergence_check") {
  IndexedFamily geo = IndexedFamily::geometric_vector(Rational(1, 2), 1, 64, 2);
  SignUniformVerdict v =
      sign_uniform_convergence_check(geo, Scalar(Rational(1, 10)), 64);
  CHECK(v.status == SignUniformVerdict::Status::Pass);
  CHECK(v.L_eps == 4);

  // square-summable orthogonal tails pass at every eps tried
  IndexedFamily ortho = IndexedFamily::orthogonal_decay(256);
  for (const Rational& eps : {Rational(1, 2), Rational(1, 5), Rational(1, 10)}) {
    SignUniformVerdict o =
        sign_uniform_convergence_check(ortho, Scalar(eps), 256);
    CHECK(o.status == SignUniformVerdict::Status::Pass);
  }

  SignUniformVerdict z =
      sign_uniform_convergence_check(IndexedFamily::zeros(32),
                                     Scalar(Rational(1, 10)), 32);
  CHECK(z.status == SignUniformVerdict::Status::Pass);
  CHECK(z.L_eps == 0);
}

TEST_CASE("guards") {
  std::vector<Rational> big(30, Rational(1));
  CHECK_THROWS_AS(y_norm(IndexedFamily::finite_real(big)), GuardError);
  std::vector<std::vector<Rational>> bigv(20, {Rational(1)});
  CHECK_THROWS_AS(z_norm(IndexedFamily::finite_vector(bigv, NormDescriptor::l1())),
                  GuardError);
  std::vector<std::pair<Rational, Rational>> bigc(14, {Rational(1), Rational(0)});
  CHECK_THROWS_AS(w_norm(IndexedFamily::finite_complex(bigc), 4), GuardError);
}
