#include <doctest.h>

#include "tncomp/builders.hpp"
#include "tncomp/mps.hpp"
#include "tncomp/network.hpp"
#include "tncomp/rng.hpp"
#include "tncomp/svd.hpp"

#include <cmath>

using namespace tncomp;

namespace {

double diff_norm(const Tensor& a, const Tensor& b) { return (a - b).norm(); }

// Amplitude oracle: explicit matrix products, one physical string at a time.
Complex amplitude_by_loops(const Mps& mps, const std::vector<std::size_t>& phys,
                           const std::vector<Complex>& left, const std::vector<Complex>& right) {
    std::vector<Complex> row = left;
    for (std::size_t k = 0; k < mps.n(); ++k) {
        const Tensor& site = mps.sites[k];
        std::vector<Complex> next(mps.bond_right(k), 0.0);
        for (std::size_t b = 0; b < mps.bond_right(k); ++b)
            for (std::size_t a = 0; a < mps.bond_left(k); ++a)
                next[b] += row[a] * site.at(phys[k], a, b);
        row = std::move(next);
    }
    Complex sum = 0.0;
    for (std::size_t b = 0; b < row.size(); ++b) sum += row[b] * right[b];
    return sum;
}

}  // namespace

TEST_CASE("delta site tensors with equal boundaries give the two-site cat state") {
    // A_i = |i><i| on the bond: amplitudes <L|A_{i1}A_{i2}|R> with L = R =
    // (1,1) vanish unless i1 = i2.
    Tensor site({2, 2, 2});
    site.at(0, 0, 0) = 1.0;
    site.at(1, 1, 1) = 1.0;
    Mps mps = build_simps(site, 2, Boundary::open({1.0, 1.0}, {1.0, 1.0}));
    const Tensor state = eval_statevector(mps);
    CHECK(state.at(0, 0) == Complex(1.0));
    CHECK(state.at(1, 1) == Complex(1.0));
    CHECK(state.at(0, 1) == Complex(0.0));
    CHECK(state.at(1, 0) == Complex(0.0));
}

TEST_CASE("scalar bonds make a product state") {
    RandomStream rng(15);
    Mps mps;
    mps.boundary = Boundary::open({1.0}, {1.0});
    std::vector<std::vector<Complex>> factors;
    for (int k = 0; k < 3; ++k) {
        Tensor site = rng.tensor({2, 1, 1});
        factors.push_back({site.at(0, 0, 0), site.at(1, 0, 0)});
        mps.sites.push_back(site);
    }
    const Tensor state = eval_statevector(mps);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(std::abs(state.at(i, j, k) - factors[0][i] * factors[1][j] * factors[2][k]) <
                      1e-12);
}

TEST_CASE("random chain amplitudes match the explicit-product oracle") {
    const Mps mps = random_mps(4, 2, 3, 99);
    RandomStream rng(100);
    const std::vector<Complex> left = rng.vector(3);
    const std::vector<Complex> right = rng.vector(3);
    const Tensor state = eval_statevector(mps, &left, &right);
    for (std::size_t flat = 0; flat < state.size(); ++flat) {
        const auto idx = state.unflatten(flat);
        CHECK(std::abs(state[flat] - amplitude_by_loops(mps, idx, left, right)) < 1e-12);
    }
}

TEST_CASE("trivial physical dimension reduces to a boundary pairing") {
    RandomStream rng(51);
    Tensor site = rng.tensor({1, 2, 2});
    Mps mps = build_simps(site, 3, Boundary::open(rng.vector(2), rng.vector(2)));
    const Tensor state = eval_statevector(mps);
    CHECK(state.size() == 1);
    // Direct product of the three site matrices between the boundaries.
    std::vector<Complex> row = mps.boundary.left;
    for (std::size_t k = 0; k < 3; ++k) {
        std::vector<Complex> next(2, 0.0);
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t a = 0; a < 2; ++a) next[b] += row[a] * site.at(0, a, b);
        row = std::move(next);
    }
    Complex expected = row[0] * mps.boundary.right[0] + row[1] * mps.boundary.right[1];
    CHECK(std::abs(state[0] - expected) < 1e-12);
}

TEST_CASE("periodic boundary evaluates to the trace of site products") {
    RandomStream rng(52);
    Tensor site = rng.tensor({2, 2, 2});
    Mps mps = build_simps(site, 4, Boundary::periodic());
    const Tensor state = eval_statevector(mps);
    for (std::size_t flat = 0; flat < state.size(); ++flat) {
        const auto idx = state.unflatten(flat);
        // Explicit trace formula.
        Complex trace = 0.0;
        for (std::size_t a = 0; a < 2; ++a) {
            std::vector<Complex> row(2, 0.0);
            row[a] = 1.0;
            for (std::size_t k = 0; k < 4; ++k) {
                std::vector<Complex> next(2, 0.0);
                for (std::size_t b = 0; b < 2; ++b)
                    for (std::size_t c = 0; c < 2; ++c) next[c] += row[b] * site.at(idx[k], b, c);
                row = std::move(next);
            }
            trace += row[a];
        }
        CHECK(std::abs(state[flat] - trace) < 1e-12);
    }
}

TEST_CASE("statevector is linear in each boundary vector") {
    const Mps mps = random_mps(3, 2, 2, 7);
    RandomStream rng(8);
    const std::vector<Complex> l1 = rng.vector(2), l2 = rng.vector(2), r = rng.vector(2);
    const Complex alpha(0.5, -2.0), beta(1.5, 0.25);

    std::vector<Complex> mixed(2);
    for (std::size_t i = 0; i < 2; ++i) mixed[i] = alpha * l1[i] + beta * l2[i];

    const Tensor lhs = eval_statevector(mps, &mixed, &r);
    Tensor rhs = alpha * eval_statevector(mps, &l1, &r) + beta * eval_statevector(mps, &l2, &r);
    CHECK(diff_norm(lhs, rhs) < 1e-10);

    // And in the right argument.
    const std::vector<Complex> r2 = rng.vector(2);
    std::vector<Complex> mixed_r(2);
    for (std::size_t i = 0; i < 2; ++i) mixed_r[i] = alpha * r[i] + beta * r2[i];
    const Tensor lhs2 = eval_statevector(mps, &l1, &mixed_r);
    Tensor rhs2 = alpha * eval_statevector(mps, &l1, &r) + beta * eval_statevector(mps, &l1, &r2);
    CHECK(diff_norm(lhs2, rhs2) < 1e-10);
}

TEST_CASE("boundary family spans exactly the operator column space") {
    // The span of {Psi_{L,R}} has dimension rank(N) <= dc^2.
    const Mps mps = random_mps(3, 2, 2, 21);
    const NetworkOperator op = evaluate_operator(mps_boundary_network(mps));
    const std::size_t rank = operator_rank(op);
    CHECK(rank <= 4);

    // Stack the statevectors of all basis boundary pairs; the rank of that
    // matrix is the family's span dimension.
    Tensor stacked({16, std::size_t{8}});
    std::size_t row = 0;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    std::vector<Complex> left{0.0, 0.0}, right{0.0, 0.0};
                    left[a] = 1.0;
                    left[b] += Complex(0.0, 1.0);  // mix to cover the complex span
                    right[c] = 1.0;
                    right[d] += Complex(0.5, 0.0);
                    const Tensor state = eval_statevector(mps, &left, &right);
                    for (std::size_t i = 0; i < state.size(); ++i) stacked.at(row, i) = state[i];
                    ++row;
                }
    CHECK(svd_support(stacked).numerical_rank == rank);
}

TEST_CASE("build_simps validates the site tensor") {
    CHECK_THROWS_AS(build_simps(Tensor({2, 2, 3}), 3, Boundary::periodic()),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_simps(Tensor({2, 2}), 3, Boundary::periodic()), std::invalid_argument);
}

TEST_CASE("single-term combination with unit coefficient is identity") {
    const Mps mps = random_mps(3, 2, 2, 31);
    Mps open = mps;
    RandomStream rng(32);
    open.boundary = Boundary::open(rng.vector(2), rng.vector(2));
    const Mps combined = linear_combination({{Complex(1.0), open}});
    CHECK(combined.n() == open.n());
    CHECK(diff_norm(eval_statevector(combined), eval_statevector(open)) < 1e-12);
}

TEST_CASE("two-term combinations double the bond and add statevectors") {
    RandomStream rng(33);
    for (int trial = 0; trial < 3; ++trial) {
        Mps a = random_mps(3, 2, 2, 100 + trial);
        Mps b = random_mps(3, 2, 2, 200 + trial);
        a.boundary = Boundary::open(rng.vector(2), rng.vector(2));
        b.boundary = Boundary::open(rng.vector(2), rng.vector(2));
        const Complex ca(0.7, 0.1), cb(-0.3, 1.2);
        const Mps sum = linear_combination({{ca, a}, {cb, b}});
        for (std::size_t k = 0; k + 1 < sum.n(); ++k) CHECK(sum.bond_right(k) == 4);

        Tensor expected = ca * eval_statevector(a) + cb * eval_statevector(b);
        CHECK(diff_norm(eval_statevector(sum), expected) <= 1e-10 * (1.0 + expected.norm()));
    }
}

TEST_CASE("combining a state with its negation cancels") {
    RandomStream rng(34);
    Mps a = random_mps(3, 2, 2, 55);
    a.boundary = Boundary::open(rng.vector(2), rng.vector(2));
    const Mps zero = linear_combination({{Complex(1.0), a}, {Complex(-1.0), a}});
    CHECK(eval_statevector(zero).norm() <= 1e-10);
}

TEST_CASE("periodic combinations add trace amplitudes") {
    Mps a = random_mps(3, 2, 2, 61);
    Mps b = random_mps(3, 2, 2, 62);
    a.boundary = Boundary::periodic();
    b.boundary = Boundary::periodic();
    const Complex ca(1.0, -0.5), cb(0.25, 0.75);
    const Mps sum = linear_combination({{ca, a}, {cb, b}});
    Tensor expected = ca * eval_statevector(a) + cb * eval_statevector(b);
    CHECK(diff_norm(eval_statevector(sum), expected) <= 1e-10 * (1.0 + expected.norm()));
}

TEST_CASE("random chains are reproducible per seed") {
    const Mps a = random_mps(3, 2, 2, 77);
    const Mps b = random_mps(3, 2, 2, 77);
    const Mps c = random_mps(3, 2, 2, 78);
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < a.sites[k].size(); ++i)
            CHECK(a.sites[k][i] == b.sites[k][i]);
    }
    bool any_diff = false;
    for (std::size_t i = 0; i < a.sites[0].size(); ++i)
        any_diff = any_diff || a.sites[0][i] != c.sites[0][i];
    CHECK(any_diff);
}

TEST_CASE("overlap via transfer matrices matches the statevector inner product") {
    RandomStream rng(81);
    Mps a = random_mps(4, 2, 2, 410);
    Mps b = random_mps(4, 2, 3, 411);
    a.boundary = Boundary::open(rng.vector(2), rng.vector(2));
    b.boundary = Boundary::open(rng.vector(3), rng.vector(3));

    const Tensor va = eval_statevector(a);
    const Tensor vb = eval_statevector(b);
    Complex direct = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i) direct += std::conj(va[i]) * vb[i];
    CHECK(std::abs(mps_overlap(a, b) - direct) < 1e-10);

    Mps pa = random_mps(3, 2, 2, 412);
    Mps pb = random_mps(3, 2, 2, 413);
    pa.boundary = Boundary::periodic();
    pb.boundary = Boundary::periodic();
    const Tensor vpa = eval_statevector(pa);
    const Tensor vpb = eval_statevector(pb);
    Complex pdirect = 0.0;
    for (std::size_t i = 0; i < vpa.size(); ++i) pdirect += std::conj(vpa[i]) * vpb[i];
    CHECK(std::abs(mps_overlap(pa, pb) - pdirect) < 1e-10);
}

TEST_CASE("statevector guardrail and boundary validation") {
    const Mps big = random_mps(30, 2, 2, 1);
    std::vector<Complex> l{1.0, 0.0}, r{1.0, 0.0};
    CHECK_THROWS_AS(eval_statevector(big, &l, &r), std::invalid_argument);

    const Mps mps = random_mps(3, 2, 2, 2);
    CHECK_THROWS_AS(eval_statevector(mps), std::invalid_argument);  // needs vectors
    std::vector<Complex> bad{1.0, 0.0, 0.0};
    CHECK_THROWS_AS(eval_statevector(mps, &bad, &r), std::invalid_argument);
}
