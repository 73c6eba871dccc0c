#include <benchmark/benchmark.h>

#include "evagent/memory/local_store.hpp"

using namespace evagent;

static void BM_Retrieve(benchmark::State& state) {
    LogicalClock clock;
    memory::LocalStoreConfig cfg;
    memory::LocalMemoryStore store(cfg, clock);
    const char* words[] = {"socks", "wool", "tea", "bottle", "skillet", "cotton", "green", "large", "black", "gift"};
    for (std::int64_t i = 0; i < state.range(0); ++i) {
        Event e;
        e.id = "ev-" + std::to_string(i);
        e.ts.wall_nanos = clock.now_nanos();
        e.intent = std::string("buy ") + words[i % 10] + " " + words[(i * 7 + 3) % 10];
        e.instruction = e.intent;
        store.record_event(e);
    }
    Event q;
    q.id = "query";
    q.intent = "buy wool socks";
    q.instruction = q.intent;
    for (auto _ : state) benchmark::DoNotOptimize(store.retrieve(q, memory::RetrievalLimits{}));
}
BENCHMARK(BM_Retrieve)->Arg(32)->Arg(256)->Arg(2048);
