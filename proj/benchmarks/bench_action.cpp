#include <benchmark/benchmark.h>

#include "evagent/model/action.hpp"
#include "evagent/model/errors.hpp"

using namespace evagent;

static void BM_ParseRender(benchmark::State& state) {
    const char* inputs[] = {"noop", R"(click["Buy Now"])", R"(search["wool hiking socks size L under 20 dollars"])",
                            R"(click["say \"hi\" [twice]"])"};
    for (auto _ : state) {
        for (const char* s : inputs) benchmark::DoNotOptimize(render_action(parse_action(s)));
    }
    state.SetItemsProcessed(state.iterations() * 4);
}
BENCHMARK(BM_ParseRender);

static void BM_ParseRejects(benchmark::State& state) {
    for (auto _ : state) {
        try {
            parse_action(R"(click["unterminated)");
        } catch (const ParseError& e) {
            benchmark::DoNotOptimize(e.position());
        }
    }
}
BENCHMARK(BM_ParseRejects);
