#pragma once

#include "tncomp/tensor.hpp"

#include <cstdint>
#include <random>

namespace tncomp {

/// Seeded random stream with a fully documented layout, so that corpora are
/// reproducible across platforms and language ports.
///
/// Engine: std::mt19937_64 seeded directly with the 64-bit seed.
/// uniform(): one engine draw x, returns (x >> 11) * 2^-53 in [0,1).
/// normal():  Box-Muller on two consecutive uniforms u1, u2:
///              r = sqrt(-2 ln(1 - u1)), theta = 2*pi*u2,
///            returns r*cos(theta) and caches r*sin(theta) for the next call.
/// complex_normal(): real part then imaginary part via normal(), so
///            E|z|^2 = 2.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    double uniform();
    double normal();
    Complex complex_normal();

    /// Uniform integer in [lo, hi] by modular reduction of one engine draw.
    /// The modulo bias is negligible for the small ranges used here.
    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);

    /// Order-n tensor with i.i.d. complex standard normal entries, filled in
    /// row-major order.
    Tensor tensor(const std::vector<std::size_t>& shape);

    std::vector<Complex> vector(std::size_t dim);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace tncomp
