#include <doctest.h>

#include "tncomp/rng.hpp"
#include "tncomp/svd.hpp"
#include "tncomp/tensor.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace tncomp;

namespace {

double max_abs_diff(const Tensor& a, const Tensor& b) {
    REQUIRE(a.shape() == b.shape());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Brute-force contraction by explicit index loops, the oracle every fast
// path is checked against.
Tensor loop_contract(const Tensor& a, const Tensor& b,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<bool> a_paired(a.order(), false), b_paired(b.order(), false);
    for (auto [la, lb] : pairs) {
        a_paired[la] = true;
        b_paired[lb] = true;
    }
    std::vector<std::size_t> a_free, b_free, out_shape;
    for (std::size_t k = 0; k < a.order(); ++k)
        if (!a_paired[k]) {
            a_free.push_back(k);
            out_shape.push_back(a.shape()[k]);
        }
    for (std::size_t k = 0; k < b.order(); ++k)
        if (!b_paired[k]) {
            b_free.push_back(k);
            out_shape.push_back(b.shape()[k]);
        }
    Tensor out(out_shape);

    std::size_t paired_total = 1;
    for (auto [la, lb] : pairs) {
        (void)lb;
        paired_total *= a.shape()[la];
    }
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        const auto out_idx = out.unflatten(flat);
        Complex sum = 0.0;
        for (std::size_t p = 0; p < paired_total; ++p) {
            std::vector<std::size_t> ai(a.order()), bi(b.order());
            for (std::size_t k = 0; k < a_free.size(); ++k) ai[a_free[k]] = out_idx[k];
            for (std::size_t k = 0; k < b_free.size(); ++k)
                bi[b_free[k]] = out_idx[a_free.size() + k];
            std::size_t rem = p;
            for (std::size_t k = pairs.size(); k-- > 0;) {
                const auto [la, lb] = pairs[k];
                ai[la] = bi[lb] = rem % a.shape()[la];
                rem /= a.shape()[la];
            }
            sum += a[a.flat_index(ai)] * b[b.flat_index(bi)];
        }
        out[flat] = sum;
    }
    return out;
}

}  // namespace

TEST_CASE("identity contraction returns the vector") {
    Tensor id = Tensor::identity(2);
    Tensor v({2}, {Complex(1.0), Complex(2.0)});
    Tensor r = contract_pair(id, v, {{1, 0}});
    CHECK(r.shape() == std::vector<std::size_t>{2});
    CHECK(r[0] == Complex(1.0));
    CHECK(r[1] == Complex(2.0));
}

TEST_CASE("matrix-pair contraction is the matrix product") {
    RandomStream rng(11);
    Tensor a = rng.tensor({3, 4});
    Tensor b = rng.tensor({4, 2});
    Tensor r = contract_pair(a, b, {{1, 0}});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Complex sum = 0.0;
            for (std::size_t k = 0; k < 4; ++k) sum += a.at(i, k) * b.at(k, j);
            CHECK(std::abs(r.at(i, j) - sum) < 1e-12);
        }
}

TEST_CASE("contraction agrees with the explicit loop oracle") {
    RandomStream rng(5);
    Tensor a = rng.tensor({2, 3, 2});
    Tensor b = rng.tensor({3, 2});
    Tensor fast = contract_pair(a, b, {{1, 0}});
    Tensor slow = loop_contract(a, b, {{1, 0}});
    CHECK(max_abs_diff(fast, slow) < 1e-12);

    Tensor c = rng.tensor({2, 2, 3, 2});
    Tensor d = rng.tensor({2, 3, 4});
    Tensor fast2 = contract_pair(c, d, {{1, 0}, {2, 1}});
    Tensor slow2 = loop_contract(c, d, {{1, 0}, {2, 1}});
    CHECK(max_abs_diff(fast2, slow2) < 1e-12);
}

TEST_CASE("contraction errors") {
    Tensor a({2, 3});
    Tensor b({4, 2});
    CHECK_THROWS_AS(contract_pair(a, b, {{1, 0}}), std::invalid_argument);  // 3 vs 4
    CHECK_THROWS_AS(contract_pair(a, b, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(contract_pair(a, b, {{5, 0}}), std::invalid_argument);
}

TEST_CASE("contraction is bilinear") {
    RandomStream rng(17);
    Tensor a = rng.tensor({2, 3});
    Tensor a2 = rng.tensor({2, 3});
    Tensor b = rng.tensor({3, 2});
    const Complex alpha(0.3, -1.1), beta(2.0, 0.7);
    Tensor lhs = contract_pair(alpha * a + beta * a2, b, {{1, 0}});
    Tensor rhs = alpha * contract_pair(a, b, {{1, 0}}) + beta * contract_pair(a2, b, {{1, 0}});
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("three-tensor chain contracts the same in either order") {
    RandomStream rng(23);
    Tensor a = rng.tensor({2, 3});
    Tensor b = rng.tensor({3, 4});
    Tensor c = rng.tensor({4, 2});
    Tensor left_first = contract_pair(contract_pair(a, b, {{1, 0}}), c, {{1, 0}});
    Tensor right_first = contract_pair(a, contract_pair(b, c, {{1, 0}}), {{1, 0}});
    CHECK(max_abs_diff(left_first, right_first) < 1e-12);
}

TEST_CASE("vectorize flips bookkeeping and keeps entries bit-identical") {
    RandomStream rng(3);
    Tensor b = rng.tensor({3, 3});
    b.set_leg_inward({false, true});  // row out, column in

    Tensor v = vectorize(b, std::vector<std::size_t>{1});
    CHECK(v.leg_inward() == std::vector<bool>{false, false});
    REQUIRE(v.size() == b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(v[i].real() == b[i].real());
        CHECK(v[i].imag() == b[i].imag());
    }

    Tensor noop = vectorize(b, std::vector<std::size_t>{});
    CHECK(noop.leg_inward() == b.leg_inward());
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(noop[i] == b[i]);

    CHECK_THROWS_AS(vectorize(b, std::vector<std::size_t>{7}), std::invalid_argument);
}

TEST_CASE("vectorized order-3 tensor matches the basis expansion") {
    RandomStream rng(9);
    Tensor t = rng.tensor({2, 3, 2});
    t.set_leg_inward({false, false, true});
    Tensor v = vectorize(t, std::vector<std::size_t>{2});

    // sum_{ijk} T_{ijk} |i>|j>|k> laid out row-major equals the entries.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 2; ++k) CHECK(v.at(i, j, k) == t.at(i, j, k));
    CHECK(v.leg_inward() == std::vector<bool>{false, false, false});
}

TEST_CASE("matricize trivial and regrouping cases") {
    RandomStream rng(29);
    Tensor m = rng.tensor({2, 3});
    Tensor same = matricize(m, {0}, {1});
    CHECK(max_abs_diff(same, m) == 0.0);

    Tensor t = rng.tensor({2, 2, 2});
    Tensor g1 = matricize(t, {0, 1}, {2});
    Tensor back = dematricize(g1, {2, 2, 2}, {0, 1}, {2});
    CHECK(max_abs_diff(back, t) == 0.0);

    Tensor g2 = matricize(t, {0}, {1, 2});
    // Fixed index bijection between the two groupings.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) CHECK(g1.at(i * 2 + j, k) == g2.at(i, j * 2 + k));
}

TEST_CASE("matricize round-trips an order-4 tensor exactly") {
    RandomStream rng(31);
    Tensor t = rng.tensor({2, 3, 2, 2});
    Tensor m = matricize(t, {2, 0}, {3, 1});
    Tensor viaid = contract_pair(Tensor::identity(m.shape()[0]), m, {{1, 0}});
    Tensor back = dematricize(viaid, {2, 3, 2, 2}, {2, 0}, {3, 1});
    CHECK(max_abs_diff(back, t) == 0.0);

    CHECK_THROWS_AS(matricize(t, {0, 1}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(matricize(t, {0, 1, 2, 3}, {3}), std::invalid_argument);
}

TEST_CASE("labels: pairing by name, propagation, and validation") {
    Tensor a({2, 3});
    a.set_leg_labels({"i", "j"});
    Tensor b({3, 4});
    b.set_leg_labels({"j", "k"});
    Tensor r = contract_pair_labels(a, b, {{"j", "j"}});
    REQUIRE(r.has_labels());
    CHECK(r.leg_labels() == std::vector<std::string>{"i", "k"});

    Tensor bad({2, 2});
    CHECK_THROWS_AS(bad.set_leg_labels({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(bad.set_leg_labels({"x"}), std::invalid_argument);
}

TEST_CASE("svd_support: zero matrix has rank 0") {
    Tensor zero({3, 4});
    SvdResult r = svd_support(zero);
    CHECK(r.numerical_rank == 0);
}

TEST_CASE("svd_support: rank-1 outer product") {
    // (1,1)^T (1,0): singular value sqrt(2).
    Tensor m({2, 2}, {Complex(1.0), Complex(0.0), Complex(1.0), Complex(0.0)});
    SvdResult r = svd_support(m);
    CHECK(r.numerical_rank == 1);
    CHECK(std::abs(r.singular_values[0] - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("svd_support: unitary input has full rank and unit spectrum") {
    // Random unitary via the unitary factor of a QR-free trick: orthonormalise
    // two random columns by hand.
    RandomStream rng(41);
    Tensor g = rng.tensor({4, 4});
    // Gram-Schmidt on columns.
    std::vector<std::vector<Complex>> cols(4, std::vector<Complex>(4));
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) cols[j][i] = g.at(i, j);
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t p = 0; p < j; ++p) {
            Complex overlap = 0.0;
            for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(cols[p][i]) * cols[j][i];
            for (std::size_t i = 0; i < 4; ++i) cols[j][i] -= overlap * cols[p][i];
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < 4; ++i) norm += std::norm(cols[j][i]);
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < 4; ++i) cols[j][i] /= norm;
    }
    Tensor u({4, 4});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) u.at(i, j) = cols[j][i];

    SvdResult r = svd_support(u);
    CHECK(r.numerical_rank == 4);
    for (double s : r.singular_values) CHECK(std::abs(s - 1.0) < 1e-12);
}

TEST_CASE("svd reconstruction within relative tolerance") {
    RandomStream rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        Tensor m = rng.tensor({5, 3});
        SvdResult r = svd_support(m);
        // u diag(s) v_dagger
        Tensor sv({r.singular_values.size(), r.singular_values.size()});
        for (std::size_t i = 0; i < r.singular_values.size(); ++i)
            sv.at(i, i) = r.singular_values[i];
        Tensor rebuilt = contract_pair(contract_pair(r.u, sv, {{1, 0}}), r.v_dagger, {{1, 0}});
        CHECK((rebuilt - m).norm() <= 1e-10 * m.norm());
    }
}

TEST_CASE("svd_support rejects non-matrices and bad tolerances") {
    CHECK_THROWS_AS(svd_support(Tensor({2, 2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(svd_support(Tensor({2, 2}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(svd_support(Tensor({2, 2}), 1.5), std::invalid_argument);
}

TEST_CASE("tensor invariants") {
    CHECK_THROWS_AS(Tensor({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Tensor({2, 2}, std::vector<Complex>(3)), std::invalid_argument);
    Tensor s = Tensor::scalar(Complex(2.5, -1.0));
    CHECK(s.order() == 0);
    CHECK(s.size() == 1);
}
