// Kernel benchmarks: the OpenMP scan against its single-worker run and the
// straight-line reference, and the two transform paths.
//
//   ./build/bench/boolspec_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <random>

#include "boolspec/fourier.hpp"
#include "boolspec/verify.hpp"

namespace {

using namespace boolspec;

const ProductDistribution& biased4() {
  static const ProductDistribution d({-0.4, 0.2, 0.6, 0.0});
  return d;
}

void BM_scan_reference(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto d = ProductDistribution::uniform(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_function_space_reference(n, d, 1));
  }
}
BENCHMARK(BM_scan_reference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_scan_kernel_serial(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_function_space(n, biased4(), 1, 1));
  }
}
BENCHMARK(BM_scan_kernel_serial)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_scan_kernel_parallel(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_function_space(n, biased4(), 1, 0));
  }
}
BENCHMARK(BM_scan_kernel_parallel)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_verify_prop2(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_prop2(4, 1, biased4()));
  }
}
BENCHMARK(BM_verify_prop2)->Unit(benchmark::kMillisecond);

void BM_transform_recursion(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(1);
  const auto tt = TruthTable::random(n, rng);
  const auto d = ProductDistribution::uniform(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transform(tt, d));
  }
}
BENCHMARK(BM_transform_recursion)->Arg(12)->Arg(16)->Arg(20)
    ->Unit(benchmark::kMicrosecond);

void BM_fast_uniform_transform(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(1);
  const auto tt = TruthTable::random(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fast_uniform_transform(tt));
  }
}
BENCHMARK(BM_fast_uniform_transform)->Arg(12)->Arg(16)->Arg(20)
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
