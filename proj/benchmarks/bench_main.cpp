#include <benchmark/benchmark.h>

#include "finsurg/nemethi.hpp"
#include "finsurg/numtheory.hpp"
#include "finsurg/obstruct.hpp"
#include "finsurg/surgery.hpp"

namespace {

void BM_DedekindSum(benchmark::State& state) {
  const long long q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(finsurg::dedekind_sum(q - 1, q));
}
BENCHMARK(BM_DedekindSum)->Arg(101)->Arg(1009)->Arg(10007);

void BM_LensD(benchmark::State& state) {
  const long long p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(finsurg::lens_d(p, p / 2 - 1, p / 3));
}
BENCHMARK(BM_LensD)->Arg(100)->Arg(10000);

void BM_DTable(benchmark::State& state) {
  const long long m = state.range(0);
  const long long n = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(finsurg::d_table(m, n));
}
BENCHMARK(BM_DTable)->Args({1, 3})->Args({1, 101})->Args({3, 101})->Args({5, 501});

void BM_Evaluate(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(finsurg::evaluate(2, n));
}
BENCHMARK(BM_Evaluate)->Arg(9)->Arg(99)->Arg(999);

void BM_ScanSerial(benchmark::State& state) {
  const long long hi = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(finsurg::scan(1, -hi, hi, 1));
}
BENCHMARK(BM_ScanSerial)->Arg(25)->Arg(100);

void BM_ScanParallel(benchmark::State& state) {
  const long long hi = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(finsurg::scan(1, -hi, hi, 4));
}
BENCHMARK(BM_ScanParallel)->Arg(25)->Arg(100);

void BM_TorusAlexander(benchmark::State& state) {
  const long long r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(finsurg::torus_alexander(r, r + 1));
}
BENCHMARK(BM_TorusAlexander)->Arg(5)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
