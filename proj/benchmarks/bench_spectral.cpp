#include <benchmark/benchmark.h>

#include "tncomp/spectral.hpp"

using namespace tncomp;

namespace {

std::vector<std::vector<Complex>> canonical_basis(std::size_t r) {
    std::vector<std::vector<Complex>> basis(r, std::vector<Complex>(r, 0.0));
    for (std::size_t l = 0; l < r; ++l) basis[l][l] = 1.0;
    return basis;
}

}  // namespace

static void BM_ChannelSpectrum(benchmark::State& state) {
    const std::size_t r = static_cast<std::size_t>(state.range(0));
    const FiducialSet set = fiducial_family(canonical_basis(r));
    for (auto _ : state) {
        ChannelSpectrum spectrum = channel_spectrum(set);
        benchmark::DoNotOptimize(spectrum.gap);
    }
}
BENCHMARK(BM_ChannelSpectrum)->DenseRange(2, 10, 2);

static void BM_GramFactorization(benchmark::State& state) {
    const std::size_t r = static_cast<std::size_t>(state.range(0));
    const FiducialSet set = fiducial_family(canonical_basis(r));
    for (auto _ : state) {
        GramFactorization g = w_factor(gram_matrix(set));
        benchmark::DoNotOptimize(g.rank);
    }
}
BENCHMARK(BM_GramFactorization)->DenseRange(2, 10, 2);
