#include <benchmark/benchmark.h>

#include "rtcycles/constructions.hpp"
#include "rtcycles/cycles.hpp"
#include "rtcycles/graph.hpp"
#include "rtcycles/rng.hpp"
#include "rtcycles/search.hpp"

using namespace rtc;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

Graph random_graph(int n, uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) g.add_edge(u, v);
    return g;
}

void BM_SpectrumPetersen(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state) {
        Budget b;
        benchmark::DoNotOptimize(spectrum(g, b));
    }
}
BENCHMARK(BM_SpectrumPetersen);

void BM_SpectrumRandom(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 99);
    for (auto _ : state) {
        Budget b;
        benchmark::DoNotOptimize(spectrum(g, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectrumRandom)->Arg(12)->Arg(16)->Arg(20)->Arg(24);

void BM_HamiltonBipartite(benchmark::State& state) {
    int half = static_cast<int>(state.range(0));
    Graph g = complete_multipartite({{half, half}});
    for (auto _ : state) {
        Budget b;
        benchmark::DoNotOptimize(has_cycle_of_length(g, 2 * half, b));
    }
}
BENCHMARK(BM_HamiltonBipartite)->Arg(8)->Arg(10)->Arg(12);

void BM_VerifyConjecture1N7(benchmark::State& state) {
    for (auto _ : state) {
        Conjecture1Options opt;
        opt.n = 7;
        benchmark::DoNotOptimize(verify_conjecture1(opt));
    }
}
BENCHMARK(BM_VerifyConjecture1N7)->Unit(benchmark::kMillisecond);

void BM_AvoidK6(benchmark::State& state) {
    Graph k6 = complete_graph(6);
    for (auto _ : state)
        benchmark::DoNotOptimize(search_coloring_avoiding(k6, {4}, {4}));
}
BENCHMARK(BM_AvoidK6)->Unit(benchmark::kMillisecond);

void BM_CountOddFree(benchmark::State& state) {
    Graph host = complete_multipartite({{2, 2, 2}});
    for (auto _ : state) benchmark::DoNotOptimize(count_odd_free_colorings(host));
}
BENCHMARK(BM_CountOddFree)->Unit(benchmark::kMillisecond);

void BM_ColorCoding(benchmark::State& state) {
    Graph g = random_graph(14, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(color_coding_find_cycle(g, static_cast<int>(state.range(0)), 5, 3));
}
BENCHMARK(BM_ColorCoding)->Arg(6)->Arg(10)->Arg(14);

void BM_TightExampleClaims(benchmark::State& state) {
    for (auto _ : state) {
        auto inst = tight_example(4);
        benchmark::DoNotOptimize(validate_claims(inst));
    }
}
BENCHMARK(BM_TightExampleClaims);

}  // namespace

BENCHMARK_MAIN();
