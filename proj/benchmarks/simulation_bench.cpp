#include <benchmark/benchmark.h>

#include <vector>

#include "safefollow/sweep.hpp"

namespace {

safefollow::ScenarioConfig multi_turn(double dt) {
  safefollow::ScenarioConfig cfg;
  cfg.script = safefollow::default_multi_turn_script();
  cfg.follower_start = {-5, 0, 0};
  cfg.plant.model = safefollow::PlantModel::kFirstOrderLag;
  cfg.plant.dt = dt;
  cfg.duration = 40.0;
  cfg.noise_std = 0.02;
  return cfg;
}

// range(0) = steps per simulated second
void BM_RunScenario(benchmark::State& state) {
  const auto cfg = multi_turn(1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    auto log = safefollow::run_scenario(cfg);
    benchmark::DoNotOptimize(log.records.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(cfg.step_count()));
}
BENCHMARK(BM_RunScenario)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_AlphaSweep(benchmark::State& state) {
  const auto cfg = multi_turn(0.01);
  const std::vector<double> alphas = {0.5, 0.8, 1.0, 1.3, 1.5, 1.8, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(safefollow::alpha_sweep(cfg, alphas));
  }
}
BENCHMARK(BM_AlphaSweep)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
