#include <benchmark/benchmark.h>

#include "evagent/runtime/runtime.hpp"

using namespace evagent;

static void BM_OptimalEpisode(benchmark::State& state) {
    const auto cfg = runtime::load_config(std::string(EVAGENT_DATA_DIR) + "/fixtures.json");
    const auto specs = runtime::load_task_specs(cfg);
    for (auto _ : state) {
        runtime::Runtime rt(cfg);
        benchmark::DoNotOptimize(rt.run_episode(specs[2]));
    }
}
BENCHMARK(BM_OptimalEpisode)->Unit(benchmark::kMicrosecond);

static void BM_Bench(benchmark::State& state) {
    const auto cfg = runtime::load_config(std::string(EVAGENT_DATA_DIR) + "/fixtures.json");
    const auto specs = runtime::load_task_specs(cfg);
    for (auto _ : state) {
        runtime::Runtime rt(cfg);
        benchmark::DoNotOptimize(rt.run_batch(specs));
    }
}
BENCHMARK(BM_Bench)->Unit(benchmark::kMillisecond);
