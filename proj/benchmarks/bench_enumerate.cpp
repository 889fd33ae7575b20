// Scan throughput: the OpenMP residue kernel against the serial reference
// scanner (Element-level checkers, different iteration order) that the tests
// use to cross-check it.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "homleib/enumerate.hpp"

namespace {

homleib::SearchConfig p3_config() {
  homleib::SearchConfig cfg;
  cfg.p = 3;
  return cfg;
}

void BM_scan_kernel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  auto cfg = p3_config();
  std::size_t count = 0;
  for (auto _ : state) {
    auto found = homleib::enumerate_all(cfg);
    count = found.size();
    benchmark::DoNotOptimize(found);
  }
  state.counters["found"] = static_cast<double>(count);
  state.counters["candidates/s"] = benchmark::Counter(
      static_cast<double>(cfg.candidate_count()), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_scan_reference(benchmark::State& state) {
  auto cfg = p3_config();
  std::size_t count = 0;
  for (auto _ : state) {
    auto found = homleib::enumerate_all_reference(cfg);
    count = found.size();
    benchmark::DoNotOptimize(found);
  }
  state.counters["found"] = static_cast<double>(count);
  state.counters["candidates/s"] = benchmark::Counter(
      static_cast<double>(cfg.candidate_count()), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_classify(benchmark::State& state) {
  auto cfg = p3_config();
  for (auto _ : state) {
    auto classes = homleib::classify(cfg);
    benchmark::DoNotOptimize(classes);
  }
}

}  // namespace

BENCHMARK(BM_scan_kernel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_reference)->Iterations(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_classify)->Iterations(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
