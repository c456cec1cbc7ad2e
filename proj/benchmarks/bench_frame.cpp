#include <benchmark/benchmark.h>

#include <random>

#include "epframe/epsolve.hpp"
#include "epframe/frame.hpp"
#include "support/helpers.hpp"

using namespace epframe;

namespace {

test_support::Instance fixed_instance(int n, double p) {
    std::mt19937 rng(424242);
    return test_support::random_graph(rng, n, n, p, p);
}

void BM_construct_frame_plain(benchmark::State& state) {
    auto inst = fixed_instance(static_cast<int>(state.range(0)), 0.25);
    for (auto _ : state) {
        Frame f = construct_frame(inst.g, inst.a, FrameVariant::plain());
        benchmark::DoNotOptimize(f.edge_list.data());
    }
}
BENCHMARK(BM_construct_frame_plain)->Arg(12)->Arg(24)->Arg(48);

void BM_construct_frame_even(benchmark::State& state) {
    auto inst = fixed_instance(static_cast<int>(state.range(0)), 0.25);
    SearchBudget budget{50'000'000};
    for (auto _ : state) {
        Frame f = construct_frame(inst.g, inst.a, FrameVariant::even(), nullptr, budget);
        benchmark::DoNotOptimize(f.edge_list.data());
    }
}
BENCHMARK(BM_construct_frame_even)->Arg(12)->Arg(20);

void BM_solve_gallai(benchmark::State& state) {
    auto inst = fixed_instance(static_cast<int>(state.range(0)), 0.25);
    for (auto _ : state) {
        Certificate cert = solve_gallai(inst.g, inst.a, 3);
        benchmark::DoNotOptimize(cert.claimed_bound);
    }
}
BENCHMARK(BM_solve_gallai)->Arg(12)->Arg(24)->Arg(48);

void BM_solve_mader_edge(benchmark::State& state) {
    auto inst = fixed_instance(static_cast<int>(state.range(0)), 0.25);
    for (auto _ : state) {
        Certificate cert = solve_mader_edge(inst.g, inst.a, 3);
        benchmark::DoNotOptimize(cert.claimed_bound);
    }
}
BENCHMARK(BM_solve_mader_edge)->Arg(12)->Arg(24)->Arg(48);

}  // namespace
