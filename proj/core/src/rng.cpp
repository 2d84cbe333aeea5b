#include "tncomp/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tncomp {

double RandomStream::uniform() {
    const std::uint64_t x = engine_();
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

Complex RandomStream::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

std::uint64_t RandomStream::integer(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("integer range is empty");
    const std::uint64_t span = hi - lo + 1;
    return lo + engine_() % span;
}

Tensor RandomStream::tensor(const std::vector<std::size_t>& shape) {
    Tensor t(shape);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = complex_normal();
    return t;
}

std::vector<Complex> RandomStream::vector(std::size_t dim) {
    std::vector<Complex> v(dim);
    for (Complex& z : v) z = complex_normal();
    return v;
}

}  // namespace tncomp
