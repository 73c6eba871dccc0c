#include <benchmark/benchmark.h>

#include "evagent/events/event_queue.hpp"

using namespace evagent;

static void BM_QueuePushPop(benchmark::State& state) {
    const auto cap = static_cast<std::size_t>(state.range(0));
    events::EventQueue q(events::QueueConfig{cap, std::chrono::seconds(60)});
    std::int64_t wall = 1'000'000'000;
    for (auto _ : state) {
        for (std::size_t i = 0; i < cap; ++i) {
            Event e;
            e.id = "ev";
            e.ts.wall_nanos = wall++;
            q.push(std::move(e));
        }
        while (q.size() > 0) benchmark::DoNotOptimize(q.pop_latest(wall));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cap));
}
BENCHMARK(BM_QueuePushPop)->Arg(16)->Arg(256)->Arg(4096);

// Pushing past capacity evicts the oldest each time.
static void BM_QueueOverflow(benchmark::State& state) {
    events::EventQueue q(events::QueueConfig{256, std::chrono::seconds(60)});
    std::int64_t wall = 1'000'000'000;
    for (auto _ : state) {
        Event e;
        e.ts.wall_nanos = wall++;
        benchmark::DoNotOptimize(q.push(std::move(e)));
    }
}
BENCHMARK(BM_QueueOverflow);
