#include <doctest.h>

#include "summa/errors.hpp"
#include "summa/measure.hpp"
#include "summa/rng.hpp"

using namespace summa;

namespace {

std::shared_ptr<const AtomSpace> space(int n) {
  return std::make_shared<AtomSpace>(AtomSpace::uniform(n));
}

}  // namespace

TEST_CASE("partition algebra validation") {
  PartitionAlgebra p = PartitionAlgebra::from_cells({{2, 1}, {0}}, 3);
  CHECK(p.cells.front().front() == 0);  // canonical order by least atom
  CHECK(p.measurable({0}));
  CHECK(p.measurable({1, 2, 0}));
  CHECK(!p.measurable({1}));
  CHECK_THROWS_AS(PartitionAlgebra::from_cells({{0, 1}}, 3), DomainError);
  CHECK_THROWS_AS(PartitionAlgebra::from_cells({{0}, {0, 1, 2}}, 3), DomainError);
  CHECK(PartitionAlgebra::trivial(4).refined_by(PartitionAlgebra::discrete(4)));
  CHECK(!PartitionAlgebra::discrete(4).refined_by(PartitionAlgebra::trivial(4)));
}

TEST_CASE("total_variation on partitions") {
  SignedMeasure mu = SignedMeasure::real(space(3), {2, -3, 1});
  CHECK(total_variation(mu).rat() == 6);
  PartitionAlgebra coarse = PartitionAlgebra::from_cells({{0, 1}, {2}}, 3);
  CHECK(total_variation(mu, coarse, {0, 1, 2}).rat() == 2);  // |2-3| + |1|
  CHECK_THROWS_AS(total_variation(mu, coarse, {0}), DomainError);

  SignedMeasure zero = SignedMeasure::real(space(3), {0, 0, 0});
  CHECK(total_variation(zero).rat() == 0);
}

TEST_CASE("jordan_decompose") {
  SignedMeasure mu = SignedMeasure::real(space(3), {2, -3, 1});
  JordanParts p = jordan_decompose(mu);
  CHECK(p.pos.weights[0].re == 2);
  CHECK(p.pos.weights[1].re == 0);
  CHECK(p.pos.weights[2].re == 1);
  CHECK(p.neg.weights[0].re == 0);
  CHECK(p.neg.weights[1].re == 3);
  CHECK(p.neg.weights[2].re == 0);

  SignedMeasure nonneg = SignedMeasure::real(space(2), {1, 2});
  JordanParts q = jordan_decompose(nonneg);
  CHECK(q.neg.weights[0].re == 0);
  CHECK(q.neg.weights[1].re == 0);

  // negation swaps the parts
  SignedMeasure neg = SignedMeasure::real(space(3), {-2, 3, -1});
  JordanParts r = jordan_decompose(neg);
  for (int a = 0; a < 3; ++a) {
    CHECK(r.pos.weights[static_cast<std::size_t>(a)].re ==
          p.neg.weights[static_cast<std::size_t>(a)].re);
    CHECK(r.neg.weights[static_cast<std::size_t>(a)].re ==
          p.pos.weights[static_cast<std::size_t>(a)].re);
  }

  CHECK_THROWS_AS(jordan_decompose(SignedMeasure::complex(space(1), {{1, 1}})),
                  DomainError);
}

TEST_CASE("hahn_decompose with the zero tie rule") {
  SignedMeasure mu = SignedMeasure::real(space(3), {2, -3, 1});
  HahnParts h = hahn_decompose(mu);
  CHECK(h.P == std::vector<int>{0, 2});
  CHECK(h.Q == std::vector<int>{1});

  HahnParts z = hahn_decompose(SignedMeasure::real(space(2), {0, 0}));
  CHECK(z.P == std::vector<int>{0, 1});
  CHECK(z.Q.empty());

  HahnParts n = hahn_decompose(SignedMeasure::real(space(2), {-1, -2}));
  CHECK(n.P.empty());
  CHECK(n.Q == std::vector<int>{0, 1});
}

TEST_CASE("radon_nikodym") {
  auto sp = space(2);
  std::vector<Rational> h = radon_nikodym(
      SignedMeasure::real(sp, {1, 2}),
      SignedMeasure::real(sp, {Rational(1, 2), Rational(1, 2)}));
  CHECK(h[0] == 2);
  CHECK(h[1] == 4);

  SignedMeasure nu = SignedMeasure::real(sp, {Rational(1, 3), Rational(2, 3)});
  std::vector<Rational> id = radon_nikodym(nu, nu);
  CHECK(id[0] == 1);
  CHECK(id[1] == 1);

  CHECK_THROWS_WITH_AS(radon_nikodym(SignedMeasure::real(sp, {1, 0}),
                                     SignedMeasure::real(sp, {0, 1})),
                       doctest::Contains("atom 'a0'"), PreconditionError);
}

TEST_CASE("lebesgue_decompose") {
  auto sp = space(2);
  LebesgueParts p = lebesgue_decompose(SignedMeasure::real(sp, {1, 1}),
                                       SignedMeasure::real(sp, {1, 0}));
  CHECK(p.ac.weights[0].re == 1);
  CHECK(p.ac.weights[1].re == 0);
  CHECK(p.sing.weights[0].re == 0);
  CHECK(p.sing.weights[1].re == 1);
  CHECK(p.density[0] == 1);
  CHECK(p.density[1] == 0);

  LebesgueParts q = lebesgue_decompose(SignedMeasure::real(sp, {3, -2}),
                                       SignedMeasure::real(sp, {1, 1}));
  CHECK(q.sing.weights[0].re == 0);
  CHECK(q.sing.weights[1].re == 0);

  LebesgueParts z = lebesgue_decompose(SignedMeasure::real(sp, {0, 0}),
                                       SignedMeasure::real(sp, {1, 0}));
  CHECK(z.ac.weights[0].re == 0);
  CHECK(z.sing.weights[1].re == 0);
}

TEST_CASE("symdiff_distance") {
  auto sp = space(4);
  SignedMeasure mu = SignedMeasure::real(
      sp, {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)});
  CHECK(symdiff_distance(mu, {0, 1}, {1, 2}) == Rational(1, 2));
  CHECK(symdiff_distance(mu, {0, 3}, {0, 3}) == 0);
  CHECK(symdiff_distance(mu, {}, {0, 1, 2, 3}) == 1);
  CHECK_THROWS_AS(symdiff_distance(SignedMeasure::real(sp, {1, -1, 0, 0}),
                                   {0}, {1}),
                  DomainError);
}

TEST_CASE("hahn consistency on a full subset lattice") {
  Rng rng(17);
  for (int round = 0; round < 20; ++round) {
    const int n = static_cast<int>(rng.range(1, 8));
    std::vector<Rational> w;
    for (int a = 0; a < n; ++a) w.push_back(rng.rational(-9, 9, 5));
    SignedMeasure mu = SignedMeasure::real(space(n), w);
    JordanParts jp = jordan_decompose(mu);
    HahnParts h = hahn_decompose(mu);
    std::vector<bool> inP(static_cast<std::size_t>(n), false);
    for (int a : h.P) inP[static_cast<std::size_t>(a)] = true;
    for (int mask = 0; mask < (1 << n); ++mask) {
      Rational pos = 0, neg = 0, muP = 0, muQ = 0;
      for (int a = 0; a < n; ++a) {
        if (!(mask >> a & 1)) continue;
        pos += jp.pos.weights[static_cast<std::size_t>(a)].re;
        neg += jp.neg.weights[static_cast<std::size_t>(a)].re;
        (inP[static_cast<std::size_t>(a)] ? muP : muQ) +=
            w[static_cast<std::size_t>(a)];
      }
      REQUIRE(pos == muP);
      REQUIRE(neg == -muQ);
    }
  }
}

TEST_CASE("atom space validation") {
  CHECK_THROWS_AS(AtomSpace::weighted({"x", "x"}, {Rational(1, 2), Rational(1, 2)}),
                  DomainError);
  CHECK_THROWS_AS(AtomSpace::weighted({"x", "y"}, {Rational(1, 2), Rational(1, 3)}),
                  DomainError);
  CHECK_THROWS_AS(AtomSpace::weighted({"x"}, {Rational(-1)}), DomainError);
}
