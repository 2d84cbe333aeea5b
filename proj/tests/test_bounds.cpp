#include <doctest.h>

#include "tncomp/bounds.hpp"
#include "tncomp/builders.hpp"
#include "tncomp/flow.hpp"

#include <cmath>

using namespace tncomp;

TEST_CASE("boundary-chain bound is 2 log dc") {
    BoundResult r = table1_bound({BoundCase::mps_boundary, 8, 1, 2, 2, 0.0});
    CHECK(r.bits == 2.0);
    CHECK(r.qubits == 2);

    r = table1_bound({BoundCase::mps_boundary, 8, 1, 2, 3, 0.0});
    CHECK(r.bits == doctest::Approx(2.0 * std::log2(3.0)).epsilon(1e-12));
    CHECK(r.qubits == 4);
}

TEST_CASE("site-independent chain bound") {
    const BoundResult r = table1_bound({BoundCase::simps, 8, 1, 2, 2, 0.0});
    const double expected = 7.0 * std::log2(15.0) + 2.0;
    CHECK(r.bits == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.bits == doctest::Approx(29.35).epsilon(1e-3));
    CHECK(r.qubits == 30);
}

TEST_CASE("grid-boundary bound hits an exact power-of-two boundary") {
    const BoundResult r = table1_bound({BoundCase::peps_boundary, 4, 4, 2, 2, 0.0});
    CHECK(r.bits == 16.0);
    CHECK(r.qubits == 16);  // exact: must not round to 17
}

TEST_CASE("remaining closed forms evaluate to their formulas") {
    {
        const BoundResult r = table1_bound({BoundCase::simps_peps, 3, 3, 2, 2, 0.0});
        const double expected = 31.0 * std::log2(9.0 + 31.0) + 12.0;
        CHECK(r.bits == doctest::Approx(expected).epsilon(1e-12));
    }
    {
        const BoundResult r = table1_bound({BoundCase::ug_fixed_state, 8, 1, 2, 1, 0.0});
        CHECK(r.bits == doctest::Approx(2.0 * std::log2(9.0)).epsilon(1e-12));
    }
    {
        const BoundResult r = table1_bound({BoundCase::ug_tns, 8, 1, 2, 1, 2.5});
        CHECK(r.bits == doctest::Approx(2.0 * std::log2(9.0) + 2.5).epsilon(1e-12));
    }
    {
        const BoundResult r = table1_bound({BoundCase::ug_mps_boundary, 8, 1, 2, 2, 0.0});
        CHECK(r.bits == doctest::Approx(2.0 * std::log2(9.0) + 2.0).epsilon(1e-12));
        CHECK(r.bits == doctest::Approx(8.34).epsilon(1e-3));
        CHECK(r.qubits == 9);
    }
    {
        const BoundResult r = table1_bound({BoundCase::ug_peps_boundary, 3, 4, 2, 2, 0.0});
        CHECK(r.bits == doctest::Approx(2.0 * std::log2(13.0) + 14.0).epsilon(1e-12));
    }
}

TEST_CASE("qubits equal the ceiling across a sweep") {
    static constexpr BoundCase kCases[] = {
        BoundCase::mps_boundary,    BoundCase::simps,          BoundCase::peps_boundary,
        BoundCase::simps_peps,      BoundCase::ug_fixed_state, BoundCase::ug_mps_boundary,
        BoundCase::ug_peps_boundary};
    for (BoundCase kase : kCases)
        for (std::uint64_t n : {1, 2, 5, 8})
            for (std::uint64_t dp : {1, 2, 3})
                for (std::uint64_t dc : {1, 2, 3, 4}) {
                    const BoundResult r = table1_bound({kase, n, 3, dp, dc, 0.0});
                    CHECK(r.qubits == static_cast<std::uint64_t>(std::ceil(r.bits - 1e-9)));
                }
}

TEST_CASE("site-independent bound is monotone in every argument") {
    auto bits = [](std::uint64_t n, std::uint64_t dp, std::uint64_t dc) {
        return table1_bound({BoundCase::simps, n, 1, dp, dc, 0.0}).bits;
    };
    for (std::uint64_t n = 1; n < 20; ++n) CHECK(bits(n, 2, 2) <= bits(n + 1, 2, 2));
    for (std::uint64_t dp = 1; dp < 5; ++dp) CHECK(bits(8, dp, 2) <= bits(8, dp + 1, 2));
    for (std::uint64_t dc = 1; dc < 5; ++dc) CHECK(bits(8, 2, dc) <= bits(8, 2, dc + 1));
}

TEST_CASE("boundary-chain calculator agrees with the flow min-cut") {
    for (std::uint64_t n : {4, 8, 16})
        for (std::uint64_t dp : {2, 3})
            for (std::uint64_t dc : {2, 3}) {
                if (2.0 * std::log2(double(dc)) > n * std::log2(double(dp))) continue;
                const BoundResult r = table1_bound({BoundCase::mps_boundary, n, 1, dp, dc, 0.0});
                const Cut cut = min_cut(build_flow_network(mps_boundary_template(n, dp, dc)));
                CHECK(r.qubits == memory_qubits(cut));
            }
}

TEST_CASE("grid-boundary calculator agrees with the flow min-cut") {
    // d_p = d_c^2 keeps the physical side at least as expensive as the rim.
    for (std::size_t rows : {2, 3})
        for (std::size_t cols : {2, 3}) {
            const BoundResult r =
                table1_bound({BoundCase::peps_boundary, rows, cols, 4, 2, 0.0});
            const Cut cut = min_cut(build_flow_network(peps_boundary_template(rows, cols, 4, 2)));
            CHECK(r.qubits == memory_qubits(cut));
        }
}

TEST_CASE("symmetric subspace dimensions") {
    CHECK(symmetric_subspace_dim(3, 2).to_string() == "4");
    CHECK(symmetric_subspace_dim(0, 5).to_string() == "1");
    CHECK(symmetric_subspace_dim(8, 8).to_string() == "6435");  // binom(15,7)
    // log2(6435) <= 7 log2(15): the closed form dominates the exact count.
    CHECK(symmetric_subspace_dim(8, 8).log2_approx() <= 7.0 * std::log2(15.0));
    CHECK(symmetric_subspace_dim(10, 3).to_string() == "66");  // binom(12,2)
}

TEST_CASE("representation-dimension bound") {
    CHECK(schur_dim_bound(8, 2, 2) == doctest::Approx(2.0 * std::log2(9.0)).epsilon(1e-12));
    CHECK(schur_dim_bound(5, 1, 1) == 0.0);
    CHECK_THROWS_AS(schur_dim_bound(5, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(schur_dim_bound(5, 2, 0), std::invalid_argument);
    // r = d reduces to the fixed-state term of the calculators.
    const double via_case = table1_bound({BoundCase::ug_fixed_state, 8, 1, 3, 1, 0.0}).bits;
    CHECK(schur_dim_bound(8, 3, 3) == doctest::Approx(via_case).epsilon(1e-12));
}

TEST_CASE("invalid queries are rejected") {
    CHECK_THROWS_AS(table1_bound({BoundCase::simps, 0, 1, 2, 2, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(table1_bound({BoundCase::simps, 2, 1, 0, 2, 0.0}), std::invalid_argument);
}
