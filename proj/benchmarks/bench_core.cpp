#include <benchmark/benchmark.h>

#include "treesplit/counting.hpp"
#include "treesplit/generators.hpp"
#include "treesplit/oracle.hpp"
#include "treesplit/samplers.hpp"
#include "treesplit/splitter.hpp"
#include "treesplit/ust.hpp"

using namespace treesplit;

static void BM_WilsonGrid(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const Graph g = make_grid(side, side);
    RngStream rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wilson_ust(g, rng));
    }
    state.SetItemsProcessed(state.iterations() * g.num_vertices());
}
BENCHMARK(BM_WilsonGrid)->Arg(8)->Arg(16)->Arg(32);

static void BM_WilsonComplete(benchmark::State& state) {
    const Graph g = make_complete(static_cast<int>(state.range(0)));
    RngStream rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wilson_ust(g, rng));
    }
}
BENCHMARK(BM_WilsonComplete)->Arg(16)->Arg(64)->Arg(256);

static void BM_PruferTree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_labeled_tree(n, rng));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_PruferTree)->Arg(100)->Arg(1600)->Arg(12800);

static void BM_FindBalancedSplit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(2);
    SpanningTree t = random_labeled_tree(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_balanced_split(t, 2));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_FindBalancedSplit)->Arg(100)->Arg(1600)->Arg(12800);

static void BM_CountSpanningTrees(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const Graph g = make_grid(side, side);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_spanning_trees(g));
    }
}
BENCHMARK(BM_CountSpanningTrees)->Arg(4)->Arg(6)->Arg(8);

static void BM_UpDownStep(benchmark::State& state) {
    const Graph g = make_complete(static_cast<int>(state.range(0)));
    RngStream rng(3);
    Forest f = random_forest_with_components(g, 2, rng);
    for (auto _ : state) {
        f = up_down_step(g, f, rng);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_UpDownStep)->Arg(6)->Arg(12)->Arg(24);

static void BM_RecomStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = make_complete(2 * n);
    RngStream rng(4);
    Partition p = *sample_balanced_partition(g, 2, rng, 100000);
    for (auto _ : state) {
        p = recom_step(g, p, n, 0, rng);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_RecomStep)->Arg(3)->Arg(6)->Arg(12);

static void BM_SplitTreeOnce(benchmark::State& state) {
    const Graph g = make_complete(static_cast<int>(state.range(0)));
    RngStream rng(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(split_tree_once(g, 2, rng));
    }
}
BENCHMARK(BM_SplitTreeOnce)->Arg(6)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
