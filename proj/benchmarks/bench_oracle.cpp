#include <benchmark/benchmark.h>

#include "epframe/gallery.hpp"
#include "epframe/oracle.hpp"

using namespace epframe;

namespace {

OracleBudget roomy(const Graph& g) {
    OracleBudget b;
    b.max_vertices = g.vertex_count();
    b.max_nodes = 500'000'000;
    return b;
}

void BM_enumerate_clique(benchmark::State& state) {
    GalleryInstance inst = gen_clique_a(static_cast<int>(state.range(0)));
    OracleBudget budget = roomy(inst.graph);
    for (auto _ : state) {
        auto paths = enumerate_paths(inst.graph, inst.a, nullptr, nullptr, PathSpec::plain(),
                                     budget);
        benchmark::DoNotOptimize(paths.data());
    }
}
BENCHMARK(BM_enumerate_clique)->Arg(3)->Arg(5)->Arg(7);

void BM_enumerate_grid_mod(benchmark::State& state) {
    GridModInstance inst = gen_grid_mod(6, 0, static_cast<int>(state.range(0)));
    OracleBudget budget = roomy(inst.base.graph);
    for (auto _ : state) {
        auto paths = enumerate_paths(inst.base.graph, inst.base.a, nullptr, nullptr,
                                     PathSpec::zero_mod(6, 0), budget);
        benchmark::DoNotOptimize(paths.data());
    }
}
BENCHMARK(BM_enumerate_grid_mod)->Arg(2)->Arg(3);

void BM_min_hitting_long_lb(benchmark::State& state) {
    GalleryInstance inst = gen_long_lb(2, 4);
    OracleBudget budget = roomy(inst.graph);
    for (auto _ : state) {
        auto hs = min_hitting_set(inst.graph, inst.a, nullptr, nullptr, PathSpec::long_paths(4),
                                  Disjointness::Vertex, -1, budget);
        benchmark::DoNotOptimize(hs.found);
    }
}
BENCHMARK(BM_min_hitting_long_lb);

}  // namespace
