#include <benchmark/benchmark.h>

#include <random>

#include "turanx/canonical.hpp"
#include "turanx/cliques.hpp"
#include "turanx/constructions.hpp"
#include "turanx/patterns.hpp"
#include "turanx/search.hpp"

using namespace turanx;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g = g.add_edge(u, v);
    return g;
}

} // namespace

static void BM_count_triangles_turan(benchmark::State& state) {
    Graph g = turan_graph({state.range(0), 3});
    for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, 3));
}
BENCHMARK(BM_count_triangles_turan)->Arg(16)->Arg(32)->Arg(64);

static void BM_clique_profile_random(benchmark::State& state) {
    std::mt19937_64 rng(42);
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, rng);
    for (auto _ : state) benchmark::DoNotOptimize(clique_profile(g).counts.size());
}
BENCHMARK(BM_clique_profile_random)->Arg(16)->Arg(32);

static void BM_canonical_form_random(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<Graph> graphs;
    for (int i = 0; i < 64; ++i) graphs.push_back(random_graph(static_cast<int>(state.range(0)), 0.5, rng));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(graphs[i % graphs.size()]).bytes.size());
        ++i;
    }
}
BENCHMARK(BM_canonical_form_random)->Arg(9)->Arg(12)->Arg(16);

static void BM_canonical_form_turan(benchmark::State& state) {
    Graph g = turan_graph({state.range(0), 4});
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).bytes.size());
}
BENCHMARK(BM_canonical_form_turan)->Arg(12)->Arg(20);

static void BM_is_free_2c5(benchmark::State& state) {
    Graph g = thm_2c5_graph(static_cast<int>(state.range(0)));
    ForbiddenPattern p = parse_pattern("2C5");
    for (auto _ : state) benchmark::DoNotOptimize(is_free(g, p));
}
BENCHMARK(BM_is_free_2c5)->Arg(12)->Arg(16)->Arg(20);

static void BM_enumerate_classes(benchmark::State& state) {
    for (auto _ : state) {
        std::uint64_t count = 0;
        enumerate_graphs(static_cast<int>(state.range(0)), [&](const Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_enumerate_classes)->Arg(6)->Arg(7);

static void BM_solve_small(benchmark::State& state) {
    for (auto _ : state) {
        SearchOutcome outcome = solve({static_cast<int>(state.range(0)), 3, parse_pattern("K4")});
        benchmark::DoNotOptimize(outcome.optimum);
    }
}
BENCHMARK(BM_solve_small)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
