// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "hpq/verifier.hpp"

namespace {

using hpq::theory::HpqParams;

constexpr HpqParams kConvexPoint{-0.5, -0.3};
constexpr HpqParams kNeitherPoint{2.0, 3.0};

void BM_VerifyRegionSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hpq::verify::reference::verify_region(kConvexPoint, n, 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyRegionParallel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hpq::verify::verify_region(kConvexPoint, n, 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = static_cast<double>(state.range(1));
}

void BM_CounterexamplesSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hpq::verify::reference::find_counterexamples(kNeitherPoint, n, 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CounterexamplesParallel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hpq::verify::find_counterexamples(kNeitherPoint, n, 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = static_cast<double>(state.range(1));
}

void thread_sweep(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_num_procs();
  for (int t = 1; t <= max_threads; t *= 2) b->Args({10'000, t});
  if ((max_threads & (max_threads - 1)) != 0) b->Args({10'000, max_threads});
}

BENCHMARK(BM_VerifyRegionSerial)->Arg(10'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyRegionParallel)->Apply(thread_sweep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CounterexamplesSerial)->Arg(10'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CounterexamplesParallel)->Apply(thread_sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
