#include <benchmark/benchmark.h>

#include "summa/rng.hpp"
#include "summa/unordered.hpp"

namespace {

summa::IndexedFamily family(int m) {
  summa::Rng rng(11);
  std::vector<summa::Rational> t;
  for (int k = 0; k < m; ++k) t.push_back(rng.rational(-9, 9, 5));
  return summa::IndexedFamily::finite_real(t);
}

void BM_YNorm(benchmark::State& state) {
  auto F = family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(summa::y_norm(F));
}
BENCHMARK(BM_YNorm)->Arg(8)->Arg(12)->Arg(16);

void BM_CauchyCheck(benchmark::State& state) {
  auto F = summa::IndexedFamily::geometric(summa::Rational(1, 2), 1, 256);
  summa::Scalar eps(summa::Rational(1, 1000000));
  for (auto _ : state)
    benchmark::DoNotOptimize(summa::generalized_cauchy_check(F, eps, 256));
}
BENCHMARK(BM_CauchyCheck);

}  // namespace
