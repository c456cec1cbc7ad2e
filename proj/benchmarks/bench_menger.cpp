#include <benchmark/benchmark.h>

#include "epframe/menger.hpp"
#include "support/helpers.hpp"

using namespace epframe;

namespace {

// Side x side grid with S on the left column and T on the right.
void BM_menger_grid(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    Graph g;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            g.add_vertex("g" + std::to_string(r) + "_" + std::to_string(c));
    auto at = [&](int r, int c) { return r * side + c; };
    for (int r = 0; r < side; ++r)
        for (int c = 0; c + 1 < side; ++c) g.add_edge(at(r, c), at(r, c + 1));
    for (int r = 0; r + 1 < side; ++r)
        for (int c = 0; c < side; ++c) g.add_edge(at(r, c), at(r + 1, c));
    std::vector<VertexId> left, right;
    for (int r = 0; r < side; ++r) {
        left.push_back(at(r, 0));
        right.push_back(at(r, side - 1));
    }
    TerminalSet s('A', g.vertex_count(), left);
    TerminalSet t('B', g.vertex_count(), right);
    for (auto _ : state) {
        CutPackPair pair = max_edge_disjoint_paths(g, s, t);
        benchmark::DoNotOptimize(pair.cut.data());
    }
}
BENCHMARK(BM_menger_grid)->Arg(6)->Arg(12)->Arg(24);

}  // namespace
