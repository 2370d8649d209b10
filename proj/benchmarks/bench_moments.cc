#include <benchmark/benchmark.h>

#include "summa/dyadic.hpp"
#include "summa/rng.hpp"

namespace {

std::vector<summa::Rational> coeffs(int n) {
  summa::Rng rng(7);
  std::vector<summa::Rational> a;
  for (int k = 0; k < n; ++k) a.push_back(rng.rational(-9, 9, 6));
  return a;
}

void BM_MomentEnumerate(benchmark::State& state) {
  auto a = coeffs(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(summa::rademacher_moment_enumerate(a, 4));
}
BENCHMARK(BM_MomentEnumerate)->Arg(8)->Arg(12)->Arg(16);

void BM_MomentMultinomial(benchmark::State& state) {
  auto a = coeffs(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(summa::rademacher_moment_multinomial(a, 4));
}
BENCHMARK(BM_MomentMultinomial)->Arg(8)->Arg(12)->Arg(16)->Arg(64);

}  // namespace
