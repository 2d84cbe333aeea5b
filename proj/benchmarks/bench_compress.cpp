#include <benchmark/benchmark.h>

#include "tncomp/compress.hpp"
#include "tncomp/mps.hpp"
#include "tncomp/rng.hpp"

using namespace tncomp;

static void BM_BuildEncodingCircuit(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Mps mps = random_mps(n, 2, 2, 7);
    for (auto _ : state) {
        EncodingCircuit circuit = build_encoding_circuit(mps);
        benchmark::DoNotOptimize(circuit.memory_dim);
    }
}
BENCHMARK(BM_BuildEncodingCircuit)->RangeMultiplier(2)->Range(4, 64);

static void BM_EncodeDecodeRoundTrip(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Mps mps = random_mps(n, 2, 2, 8);
    const EncodingCircuit circuit = build_encoding_circuit(mps);
    RandomStream rng(9);
    const std::vector<Complex> l = rng.vector(2), r = rng.vector(2);
    const Tensor psi = eval_statevector(mps, &l, &r);
    for (auto _ : state) {
        Tensor back = decode(encode(psi, circuit), circuit);
        benchmark::DoNotOptimize(back.entries().data());
    }
}
BENCHMARK(BM_EncodeDecodeRoundTrip)->DenseRange(4, 12, 4);

static void BM_PairIsometry(benchmark::State& state) {
    const std::size_t dc = static_cast<std::size_t>(state.range(0));
    const Mps mps = random_mps(2, 2, dc, 10);
    for (auto _ : state) {
        PartialIsometry v = pair_isometry(mps, 0);
        benchmark::DoNotOptimize(v.support_rank);
    }
}
BENCHMARK(BM_PairIsometry)->DenseRange(2, 8, 2);
