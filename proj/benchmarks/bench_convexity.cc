#include <benchmark/benchmark.h>

#include "summa/paths.hpp"

namespace {

void BM_ModulusL2(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(summa::uniform_convexity_modulus(
        summa::NormDescriptor::l2(), 2, {1.0}, state.range(0)));
}
BENCHMARK(BM_ModulusL2)->Arg(512)->Arg(2048)->Arg(8192);

void BM_StrictWitness(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(summa::strict_convexity_witness(
        summa::NormDescriptor::l1(), 2, state.range(0)));
}
BENCHMARK(BM_StrictWitness)->Arg(512)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
