#include <doctest.h>

#include "tncomp/bigint.hpp"

#include <cmath>
#include <cstdint>

using tncomp::BigUint;

TEST_CASE("small values behave like integers") {
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(1).to_string() == "1");
    CHECK(BigUint(123456789).to_string() == "123456789");
    CHECK((BigUint(6) * 7).to_string() == "42");
}

TEST_CASE("products beyond 64 bits stay exact") {
    // 4096^6 = 2^72
    BigUint v(1);
    for (int i = 0; i < 6; ++i) v *= 4096;
    CHECK(v.to_string() == "4722366482869645213696");
    CHECK(v.bit_length() == 73);
    CHECK(v.is_power_of_two());
    CHECK(v.ceil_log2() == 72);
}

TEST_CASE("ceil_log2 rounds non-powers up") {
    CHECK(BigUint(1).ceil_log2() == 0);
    CHECK(BigUint(2).ceil_log2() == 1);
    CHECK(BigUint(3).ceil_log2() == 2);
    CHECK(BigUint(4).ceil_log2() == 2);
    CHECK(BigUint(6).ceil_log2() == 3);
    CHECK(BigUint(7).ceil_log2() == 3);
    CHECK(BigUint(1024).ceil_log2() == 10);
}

TEST_CASE("comparison and addition") {
    BigUint a(0xffffffffffffffffull);
    BigUint b = a;
    b += BigUint(1);
    CHECK(a < b);
    CHECK(b.to_string() == "18446744073709551616");
    CHECK_FALSE(b < a);
}

TEST_CASE("exact division") {
    BigUint v(1);
    for (std::uint64_t k = 2; k <= 20; ++k) v *= k;  // 20!
    CHECK(v.to_string() == "2432902008176640000");
    v.divide_exact(1000);
    CHECK(v.to_string() == "2432902008176640");
    CHECK_THROWS(BigUint(7).divide_exact(2));
}

TEST_CASE("log2_approx tracks the float log") {
    BigUint v(1);
    double expected = 0.0;
    for (int i = 0; i < 40; ++i) {
        v *= 7;
        expected += std::log2(7.0);
    }
    CHECK(std::abs(v.log2_approx() - expected) < 1e-9);
}
