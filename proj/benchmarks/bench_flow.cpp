#include <benchmark/benchmark.h>

#include "tncomp/builders.hpp"
#include "tncomp/flow.hpp"

using namespace tncomp;

static void BM_MaxFlowChain(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FlowGraph g = build_flow_network(mps_boundary_template(n, 2, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_flow(g));
    }
}
BENCHMARK(BM_MaxFlowChain)->RangeMultiplier(4)->Range(8, 512);

static void BM_MinCutGrid(benchmark::State& state) {
    const std::size_t side = static_cast<std::size_t>(state.range(0));
    const FlowGraph g = build_flow_network(peps_boundary_template(side, side, 4, 2));
    for (auto _ : state) {
        Cut cut = min_cut(g);
        benchmark::DoNotOptimize(cut.capacity_bits);
    }
}
BENCHMARK(BM_MinCutGrid)->DenseRange(2, 8, 2);

static void BM_EnumerateCuts(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FlowGraph g = build_flow_network(mps_boundary_template(n, 2, 2));
    for (auto _ : state) {
        Cut cut = enumerate_cuts(g);
        benchmark::DoNotOptimize(cut.capacity_bits);
    }
}
BENCHMARK(BM_EnumerateCuts)->DenseRange(4, 16, 4);
