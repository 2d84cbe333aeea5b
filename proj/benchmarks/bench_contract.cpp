#include <benchmark/benchmark.h>

#include "tncomp/rng.hpp"
#include "tncomp/tensor.hpp"

using namespace tncomp;

static void BM_ContractMatrices(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    RandomStream rng(1);
    const Tensor a = rng.tensor({n, n});
    const Tensor b = rng.tensor({n, n});
    for (auto _ : state) {
        Tensor c = contract_pair(a, b, {{1, 0}});
        benchmark::DoNotOptimize(c.entries().data());
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_ContractMatrices)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_ContractPairOfOrder3(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    RandomStream rng(2);
    const Tensor a = rng.tensor({d, d, d});
    const Tensor b = rng.tensor({d, d, d});
    for (auto _ : state) {
        Tensor c = contract_pair(a, b, {{2, 0}, {1, 1}});
        benchmark::DoNotOptimize(c.entries().data());
    }
}
BENCHMARK(BM_ContractPairOfOrder3)->RangeMultiplier(2)->Range(4, 32);

static void BM_Permute(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    RandomStream rng(3);
    const Tensor t = rng.tensor({d, d, d, d});
    for (auto _ : state) {
        Tensor p = permute(t, {3, 1, 0, 2});
        benchmark::DoNotOptimize(p.entries().data());
    }
}
BENCHMARK(BM_Permute)->RangeMultiplier(2)->Range(4, 16);
