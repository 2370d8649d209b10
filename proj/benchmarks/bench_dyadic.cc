#include <benchmark/benchmark.h>

#include "summa/dyadic.hpp"
#include "summa/rng.hpp"

namespace {

summa::DyadicMeasure measure(int level) {
  summa::Rng rng(3);
  std::vector<summa::Rational> dens;
  for (long c = 0; c < (1L << level); ++c) dens.push_back(rng.rational(0, 6, 4));
  return summa::DyadicMeasure::from(
      summa::DyadicStep::from_values(level, std::move(dens)),
      {{summa::Rational(1, 4), summa::Rational(1, 2)}});
}

void BM_DyadicMaximal(benchmark::State& state) {
  auto mu = measure(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(summa::dyadic_maximal(mu, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DyadicMaximal)->Arg(6)->Arg(8)->Arg(10);

void BM_HlWeakType(benchmark::State& state) {
  auto mu = measure(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        summa::hl_maximal_weak_type(mu, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HlWeakType)->Arg(5)->Arg(7)->Arg(9);

}  // namespace
