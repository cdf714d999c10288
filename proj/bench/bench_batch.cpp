#include "agi/batch.hpp"

#include <benchmark/benchmark.h>

namespace {

std::vector<agi::InstanceSpec> specs(std::int64_t count) {
  agi::FuzzOptions options;
  options.count = static_cast<std::size_t>(count);
  options.mutations = static_cast<std::size_t>(count) / 5;
  return agi::make_specs(options);
}

void BM_serial(benchmark::State& state) {
  const auto work = specs(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(agi::run_batch_serial(work));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(work.size()));
}

void BM_parallel(benchmark::State& state) {
  const auto work = specs(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(agi::run_batch_parallel(work));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(work.size()));
}

} // namespace

BENCHMARK(BM_serial)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
