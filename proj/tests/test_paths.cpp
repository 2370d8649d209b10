#include <doctest.h>

#include "summa/errors.hpp"
#include "summa/paths.hpp"
#include "summa/rng.hpp"

#include <cmath>

using namespace summa;

TEST_CASE("path_length basic examples") {
  // two unit segments under l2
  Polyline f = Polyline::make({0, 1, 2}, {{0, 0}, {1, 0}, {1, 1}});
  CHECK(path_length(f).approx == doctest::Approx(2.0));

  // monotone scalar samples: Lambda = f(b) - f(a)
  Polyline mono = Polyline::make({0, 1, 2, 3}, {{1}, {2}, {4}, {7}});
  CHECK(path_length(mono).length.rat() == 6);

  // constant path has zero length
  Polyline c = Polyline::make({0, 1}, {{3, 3}, {3, 3}});
  CHECK(path_length(c).approx == doctest::Approx(0.0));
  CHECK_THROWS_AS(Polyline::make({0, 0}, {{1}, {2}}), DomainError);
}

TEST_CASE("pos_neg_variation") {
  Polyline f = Polyline::make({0, 1, 2, 3}, {{0}, {2}, {1}, {3}});
  Variation v = pos_neg_variation(f);
  CHECK(v.pos == 4);
  CHECK(v.neg == 1);
  CHECK(v.total == 5);
  CHECK(v.pos - v.neg == 3);

  Polyline mono = Polyline::make({0, 1, 2}, {{1}, {1}, {5}});
  CHECK(pos_neg_variation(mono).neg == 0);

  // negating swaps P and N
  Polyline nf = Polyline::make({0, 1, 2, 3}, {{0}, {-2}, {-1}, {-3}});
  Variation nv = pos_neg_variation(nf);
  CHECK(nv.pos == v.neg);
  CHECK(nv.neg == v.pos);

  Polyline vec = Polyline::make({0, 1}, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(pos_neg_variation(vec), DomainError);
}

TEST_CASE("path measure via one-sided limits") {
  Polyline f = Polyline::make({0, 1, 2}, {{1}, {4}, {2}});
  IntervalMeasureFromPath nu = path_measure(f);
  CHECK(nu.of(IntervalSpec::closed(0, 2))[0] == 1);  // telescoping 2 - 1

  // jump path: a single jump J at an interior knot is the point mass
  Polyline jr = Polyline::make({0, 1, 2}, {{1}, {4}, {4}}, Interp::JumpRight);
  IntervalMeasureFromPath nujr = path_measure(jr);
  CHECK(nujr.of(IntervalSpec::closed(1, 1))[0] == 3);
  CHECK(nujr.of(IntervalSpec::open(0, 1))[0] == 0);

  Polyline jl = Polyline::make({0, 1, 2}, {{1}, {1}, {4}}, Interp::JumpLeft);
  IntervalMeasureFromPath nujl = path_measure(jl);
  CHECK(nujl.of(IntervalSpec::closed(1, 1))[0] == 3);

  // disjoint additivity on random interval pairs, exact
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Rational> knots;
    std::vector<std::vector<Rational>> pts;
    Rational t = 0;
    for (int k = 0; k < 5; ++k) {
      knots.push_back(t);
      t += rng.rational(1, 3, 2);
      pts.push_back({rng.rational(-8, 8, 4)});
    }
    Polyline g = Polyline::make(knots, pts,
                                static_cast<Interp>(rng.range(0, 2)));
    IntervalMeasureFromPath m = path_measure(g);
    Rational c1 = g.a() + (g.b() - g.a()) / 4;
    Rational c2 = g.a() + (g.b() - g.a()) / 2;
    IntervalSpec A{g.a(), c1, true, false};
    IntervalSpec B{c2, g.b(), true, true};
    REQUIRE(m.of_union({A, B})[0] == m.of(A)[0] + m.of(B)[0]);
    REQUIRE(m.dominated(IntervalSpec{c1, c2, rng.coin(), rng.coin()}));
  }

  CHECK_THROWS_AS(nu.of(IntervalSpec::closed(-1, 1)), DomainError);
}

TEST_CASE("piecewise polynomial parsing and evaluation") {
  auto p = PiecewisePoly::parse("t^2");
  REQUIRE(p);
  CHECK(p->eval(Rational(3)) == 9);
  auto q = PiecewisePoly::parse("1 + 2*t - 3/2*t^3");
  REQUIRE(q);
  CHECK(q->eval(Rational(2)) == Rational(1 + 4 - 12));
  auto c = PiecewisePoly::parse("5/2");
  REQUIRE(c);
  CHECK(c->eval(Rational(100)) == Rational(5, 2));
  CHECK(!PiecewisePoly::parse(""));
  CHECK(!PiecewisePoly::parse("x + 1"));
}

TEST_CASE("riemann_stieltjes") {
  // phi = 1 telescopes for any mesh
  Polyline f = Polyline::make({0, 1, 2}, {{1}, {4}, {2}});
  PiecewisePoly one = PiecewisePoly::poly({Rational(1)});
  for (const Rational& mesh : {Rational(1), Rational(1, 7), Rational(1, 64)})
    CHECK(riemann_stieltjes(one, f, mesh).value[0] == 1);

  // phi(t) = t against f(t) = t on [0,1]: the midpoint sum is exactly 1/2
  Polyline ident = Polyline::make({0, 1}, {{0}, {1}});
  PiecewisePoly tpoly = PiecewisePoly::poly({0, 1});
  for (int k = 2; k <= 10; ++k) {
    StieltjesResult r =
        riemann_stieltjes(tpoly, ident, Rational(1, 1L << k));
    CHECK(std::fabs(rat_dbl(r.value[0]) - 0.5) <= 1.0 / (1 << k));
    CHECK(r.error_bound >= 0);
  }

  // jump path: phi continuous picks up phi(c) * J as the mesh refines
  Polyline jump = Polyline::make({0, Rational(1, 2), 1}, {{0}, {2}, {2}},
                                 Interp::JumpRight);
  PiecewisePoly tsq = *PiecewisePoly::parse("t^2");
  StieltjesResult r = riemann_stieltjes(tsq, jump, Rational(1, 1024));
  // phi(c) * J with phi = t^2, c = 1/2, J = 2
  CHECK(rat_dbl(r.value[0]) == doctest::Approx(0.5).epsilon(0.01));

  CHECK_THROWS_AS(riemann_stieltjes(one, f, Rational(0)), DomainError);
}

TEST_CASE("uniform_convexity_modulus l2 closed form") {
  auto table = uniform_convexity_modulus(NormDescriptor::l2(), 2,
                                         {0.5, 1.0, 1.5}, 10000);
  for (const ModulusEntry& e : table) {
    double expect = 1.0 - std::sqrt(1.0 - e.eps * e.eps / 4.0);
    CHECK(e.delta_hat == doctest::Approx(expect).epsilon(1e-4));
    CHECK(e.delta_hat >= expect - 1e-12);  // always an upper bound
  }

  // l1 in d=2: flat faces force the modulus to zero
  auto flat = uniform_convexity_modulus(NormDescriptor::l1(), 2, {1.0}, 4096);
  CHECK(flat.front().delta_hat <= 1e-9);

  // eps -> 0 sends delta to 0 for every norm
  auto tiny = uniform_convexity_modulus(NormDescriptor::l2(), 2, {1e-3}, 2048);
  CHECK(tiny.front().delta_hat <= 1e-3);

  CHECK_THROWS_AS(uniform_convexity_modulus(NormDescriptor::l2(), 4, {1.0}, 64),
                  DomainError);
}

TEST_CASE("averaged_convexity_check") {
  // all vectors equal on the sphere: distance sum is zero
  AveragedConvexityReport r = averaged_convexity_check(
      NormDescriptor::l2(), {{1, 0}, {1, 0}},
      {Rational(1, 2), Rational(1, 2)}, 0.5, 0.1);
  CHECK(r.premise);
  CHECK(r.conclusion);
  CHECK(!r.counterexample);

  // antipodal pair: the premise fails, vacuous pass
  AveragedConvexityReport v = averaged_convexity_check(
      NormDescriptor::l2(), {{1, 0}, {-1, 0}},
      {Rational(1, 2), Rational(1, 2)}, 0.5, 0.1);
  CHECK(!v.premise);
  CHECK(!v.counterexample);

  CHECK_THROWS_AS(averaged_convexity_check(NormDescriptor::l2(), {{1, 0}},
                                           {Rational(1, 2)}, 0.5, 0.1),
                  DomainError);
}

TEST_CASE("strict_convexity_witness") {
  StrictConvexityResult linf = strict_convexity_witness(NormDescriptor::linf(), 2, 10000);
  CHECK(linf.witness_found);
  StrictConvexityResult l1 = strict_convexity_witness(NormDescriptor::l1(), 2, 10000);
  CHECK(l1.witness_found);
  StrictConvexityResult l2 = strict_convexity_witness(NormDescriptor::l2(), 2, 10000);
  CHECK(!l2.witness_found);
  // lp spheres for p > 2 flatten cubically near the axes, so the grid
  // has to stay coarse enough for the tau = 1e-9 threshold
  StrictConvexityResult l3 = strict_convexity_witness(NormDescriptor::lp(Exponent(3)), 2, 512);
  CHECK(!l3.witness_found);
}

TEST_CASE("custom table norms validate the triangle inequality") {
  // a genuine norm: the l2 gauge sampled uniformly
  std::vector<double> round(64, 1.0);
  NormDescriptor nd = NormDescriptor::custom_table(round);
  double v[2] = {3, 4};
  CHECK(nd.eval_dbl(std::span<const double>(v, 2)) == doctest::Approx(5.0));

  // a wildly non-convex gauge is rejected
  std::vector<double> spiky(64, 1.0);
  for (std::size_t i = 0; i < spiky.size(); i += 2) spiky[i] = 40.0;
  CHECK_THROWS_AS(NormDescriptor::custom_table(spiky), DomainError);
}

TEST_CASE("length additivity and refinement invariance") {
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    std::vector<Rational> knots;
    std::vector<std::vector<Rational>> pts;
    Rational t = 0;
    for (int k = 0; k < 6; ++k) {
      knots.push_back(t);
      t += rng.rational(1, 3, 2);
      pts.push_back({rng.rational(-9, 9, 5)});
    }
    Polyline f = Polyline::make(knots, pts);
    Rational lambda = path_length(f).length.rat();

    // additivity at each interior knot
    for (std::size_t cut = 1; cut + 1 < knots.size(); ++cut) {
      Polyline left = Polyline::make(
          {knots.begin(), knots.begin() + static_cast<long>(cut) + 1},
          {pts.begin(), pts.begin() + static_cast<long>(cut) + 1});
      Polyline right = Polyline::make(
          {knots.begin() + static_cast<long>(cut), knots.end()},
          {pts.begin() + static_cast<long>(cut), pts.end()});
      REQUIRE(path_length(left).length.rat() + path_length(right).length.rat() ==
              lambda);
    }

    // inserting an on-segment knot never changes the sum
    Rational mid = (knots[2] + knots[3]) / 2;
    std::vector<Rational> k2 = knots;
    std::vector<std::vector<Rational>> p2 = pts;
    k2.insert(k2.begin() + 3, mid);
    p2.insert(p2.begin() + 3, f.at(mid));
    CHECK(path_length(Polyline::make(k2, p2)).length.rat() == lambda);
  }
}
