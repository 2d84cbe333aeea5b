#include <doctest.h>

#include "tncomp/rng.hpp"

#include <cmath>

using namespace tncomp;

TEST_CASE("identical seeds give bit-identical streams") {
    RandomStream a(123), b(123);
    for (int i = 0; i < 100; ++i) {
        const Complex za = a.complex_normal();
        const Complex zb = b.complex_normal();
        CHECK(za.real() == zb.real());
        CHECK(za.imag() == zb.imag());
    }
    Tensor ta = RandomStream(9).tensor({2, 3, 2});
    Tensor tb = RandomStream(9).tensor({2, 3, 2});
    for (std::size_t i = 0; i < ta.size(); ++i) CHECK(ta[i] == tb[i]);
}

TEST_CASE("different seeds differ") {
    Tensor ta = RandomStream(1).tensor({4, 4});
    Tensor tb = RandomStream(2).tensor({4, 4});
    bool any_diff = false;
    for (std::size_t i = 0; i < ta.size(); ++i) any_diff = any_diff || ta[i] != tb[i];
    CHECK(any_diff);
}

TEST_CASE("complex normals have mean |z|^2 of 2 within 10%") {
    RandomStream rng(2024);
    const int n = 10000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += std::norm(rng.complex_normal());
    const double mean = sum / n;
    CHECK(mean > 1.8);
    CHECK(mean < 2.2);
}

TEST_CASE("uniform stays in [0,1) and integer respects bounds") {
    RandomStream rng(7);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const auto v = rng.integer(3, 9);
        CHECK(v >= 3);
        CHECK(v <= 9);
    }
}
