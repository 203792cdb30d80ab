#include <benchmark/benchmark.h>

#include <complex>

#include "h6/cubic.hpp"
#include "h6/equivalence.hpp"
#include "h6/mub.hpp"
#include "h6/x6.hpp"

namespace {

const h6::Complex kAlpha(0.0, 0.5);

void BM_SolveCubic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(h6::solve_falpha(kAlpha));
}
BENCHMARK(BM_SolveCubic);

void BM_X6FromAlpha(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(h6::x6_from_alpha(kAlpha));
}
BENCHMARK(BM_X6FromAlpha);

void BM_Fingerprint(benchmark::State& state) {
  h6::ComplexMatrix m = h6::x6_from_alpha(kAlpha);
  for (auto _ : state) benchmark::DoNotOptimize(h6::fingerprint(m));
}
BENCHMARK(BM_Fingerprint);

void BM_AreEquivalentHit(benchmark::State& state) {
  h6::ComplexMatrix m = h6::x6_from_alpha(kAlpha);
  for (auto _ : state) benchmark::DoNotOptimize(h6::are_equivalent(m, m));
}
BENCHMARK(BM_AreEquivalentHit);

void BM_AreEquivalentMiss(benchmark::State& state) {
  h6::ComplexMatrix a = h6::x6_from_alpha(kAlpha);
  h6::ComplexMatrix b = a.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(h6::are_equivalent(a, b));
}
BENCHMARK(BM_AreEquivalentMiss);

void BM_MubFromAlpha(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(h6::mub_from_alpha(kAlpha));
}
BENCHMARK(BM_MubFromAlpha);

}  // namespace

BENCHMARK_MAIN();
