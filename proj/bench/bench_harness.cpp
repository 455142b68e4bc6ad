// Serial reference vs OpenMP consistency experiment, plus the two hot
// kernels underneath them.
#include "hsd/constructions.hpp"
#include "hsd/dominance.hpp"
#include "hsd/harness.hpp"

#include <benchmark/benchmark.h>

namespace {

hsd::ExperimentConfig bench_config(unsigned trials) {
  hsd::ExperimentConfig cfg;
  cfg.seed = 7;
  cfg.trials = trials;
  cfg.max_atoms = 5;
  cfg.denominator_bound = 16;
  cfg.orders = {1, 2, 3, 4, 5, 6};
  return cfg;
}

void BM_ConsistencySerial(benchmark::State& state) {
  const auto cfg = bench_config(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hsd::consistency_experiment_serial(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConsistencySerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ConsistencyParallel(benchmark::State& state) {
  const auto cfg = bench_config(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hsd::consistency_experiment(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConsistencyParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Check4SDRealExample(benchmark::State& state) {
  const auto pair = hsd::example_counter_pair(hsd::make_rational(1, 100));
  for (auto _ : state) benchmark::DoNotOptimize(hsd::check_nsd_real(pair.x, pair.y, 4));
}
BENCHMARK(BM_Check4SDRealExample);

void BM_Check6SDRandom(benchmark::State& state) {
  const auto cfg = bench_config(1);
  const auto x = hsd::random_distribution(cfg, 1);
  const auto y = hsd::random_distribution(cfg, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hsd::check_nsd_real(x, y, 6));
}
BENCHMARK(BM_Check6SDRandom);

}  // namespace

BENCHMARK_MAIN();
