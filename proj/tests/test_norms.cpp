#include <doctest.h>

#include "summa/errors.hpp"
#include "summa/norms.hpp"
#include "summa/rng.hpp"

#include <cmath>

using namespace summa;

namespace {
SeqVector sv(std::vector<Rational> v) { return SeqVector::from_rationals(v); }
}

TEST_CASE("lp_norm basic values") {
  CHECK(lp_norm(sv({3, 4}), Exponent(2)).dbl() == doctest::Approx(5.0));
  CHECK(lp_norm(sv({1, 1}), Exponent(1)).rat() == 2);
  CHECK(lp_norm(sv({3, -4, 0}), Exponent::infinity()).rat() == 4);
  CHECK(lp_norm(sv({}), Exponent::infinity()).rat() == 0);
  CHECK_THROWS_AS(lp_norm(sv({1}), Exponent(0.0)), DomainError);
}

TEST_CASE("lp_norm exactness contract") {
  Scalar l1 = lp_norm(sv({Rational(1, 3), Rational(-1, 6)}), Exponent(1));
  REQUIRE(l1.exact());
  CHECK(l1.rat() == Rational(1, 2));
  Scalar linf = lp_norm(sv({Rational(1, 3), Rational(-1, 6)}), Exponent::infinity());
  REQUIRE(linf.exact());
  CHECK(linf.rat() == Rational(1, 3));
  CHECK(!lp_norm(sv({1, 1}), Exponent(2)).exact());
}

TEST_CASE("holder_verify on the stated examples") {
  // parallel vectors: equality
  HolderReport r1 = holder_verify(sv({1, 1}), sv({1, 1}), Exponent(2), Exponent(2));
  CHECK(r1.lhs.dbl() == doctest::Approx(2.0));
  CHECK(r1.rhs.dbl() == doctest::Approx(2.0));
  CHECK(r1.holds);
  CHECK(r1.equality_within_tol);

  // disjoint supports
  HolderReport r2 = holder_verify(sv({1, 0}), sv({0, 1}), Exponent(1),
                                  Exponent::infinity());
  CHECK(r2.lhs.dbl() == doctest::Approx(0.0));
  CHECK(r2.holds);

  // direct arithmetic: lhs = 4, rhs = sqrt5 * sqrt5 = 5
  HolderReport r3 = holder_verify(sv({1, 2}), sv({2, 1}), Exponent(2), Exponent(2));
  CHECK(r3.lhs.dbl() == doctest::Approx(4.0));
  CHECK(r3.rhs.dbl() == doctest::Approx(5.0));
  CHECK(r3.holds);

  CHECK_THROWS_AS(holder_verify(sv({1}), sv({1, 2}), Exponent(2), Exponent(2)),
                  DomainError);
  CHECK_THROWS_AS(holder_verify(sv({1}), sv({1}), Exponent(2), Exponent(3)),
                  DomainError);
}

TEST_CASE("lp_interpolate on the stated examples") {
  // constants under counting measure: equality at t = 1/2
  InterpolationReport r =
      lp_interpolate(sv({1, 1, 1, 1}), Exponent(1), Exponent::infinity(),
                     Exponent(2));
  CHECK(r.t == doctest::Approx(0.5));
  CHECK(r.lhs.dbl() == doctest::Approx(2.0));
  CHECK(r.rhs.dbl() == doctest::Approx(2.0));
  CHECK(r.holds);

  // single atom: equality for all admissible triples
  InterpolationReport r2 = lp_interpolate(sv({1, 0, 0}), Exponent(1),
                                          Exponent(4), Exponent(2));
  CHECK(r2.lhs.dbl() == doctest::Approx(r2.rhs.dbl()));
  CHECK(r2.holds);

  // direct arithmetic oracle at p=2, q=4, r=3
  SeqVector f = sv({2, 1});
  InterpolationReport r3 = lp_interpolate(f, Exponent(2), Exponent(4), Exponent(3));
  double n2 = std::sqrt(5.0), n4 = std::pow(17.0, 0.25), n3 = std::cbrt(9.0);
  double t = (1.0 / 3 - 1.0 / 4) / (1.0 / 2 - 1.0 / 4);
  CHECK(r3.lhs.dbl() == doctest::Approx(n3));
  CHECK(r3.rhs.dbl() == doctest::Approx(std::pow(n2, t) * std::pow(n4, 1 - t)));
  CHECK(r3.holds);

  CHECK_THROWS_AS(lp_interpolate(f, Exponent(3), Exponent(4), Exponent(2)),
                  DomainError);
}

TEST_CASE("p_subadditivity_check") {
  CHECK(p_subadditivity_check(Scalar(1), Scalar(1), Exponent(1)));
  CHECK(p_subadditivity_check(Scalar(1), Scalar(1), Exponent(0.5)));
  CHECK(p_subadditivity_check(Scalar(0), Scalar(5), Exponent(0.3)));
  CHECK_THROWS_AS(p_subadditivity_check(Scalar(1), Scalar(1), Exponent(1.5)),
                  DomainError);
  CHECK_THROWS_AS(p_subadditivity_check(Scalar(-1), Scalar(1), Exponent(0.5)),
                  DomainError);
}

TEST_CASE("monotonicity property on random vectors") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    std::vector<Rational> v;
    int n = static_cast<int>(rng.range(1, 7));
    for (int k = 0; k < n; ++k) v.push_back(rng.rational(-9, 9, 7));
    double p = 0.3 + 3 * rng.unit();
    double q = p + 2 * rng.unit();
    CHECK(lp_norm(sv(v), Exponent(q)).dbl() <=
          lp_norm(sv(v), Exponent(p)).dbl() + 1e-9);
  }
}
