#include "tncomp/mps.hpp"

#include "tncomp/rng.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace tncomp {

namespace {
using RowMajorMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using VectorXc = Eigen::VectorXcd;
}  // namespace

void Mps::validate() const {
    if (sites.empty()) throw std::invalid_argument("chain has no sites");
    for (std::size_t k = 0; k < sites.size(); ++k) {
        if (sites[k].order() != 3)
            throw std::invalid_argument("site tensor must have legs (phys, left, right)");
        if (k + 1 < sites.size() && bond_right(k) != bond_left(k + 1))
            throw std::invalid_argument("adjacent bond extents do not match at site " +
                                        std::to_string(k));
    }
    switch (boundary.kind) {
        case BoundaryKind::open:
            if (boundary.left.size() != bond_left(0))
                throw std::invalid_argument("left boundary extent does not match first bond");
            if (boundary.right.size() != bond_right(sites.size() - 1))
                throw std::invalid_argument("right boundary extent does not match last bond");
            break;
        case BoundaryKind::periodic:
            if (bond_left(0) != bond_right(sites.size() - 1))
                throw std::invalid_argument("periodic boundary needs matching end bonds");
            break;
        case BoundaryKind::variable:
            break;
    }
}

Tensor eval_statevector(const Mps& mps, const std::vector<Complex>* left,
                        const std::vector<Complex>* right, std::size_t max_total_dim) {
    mps.validate();
    const std::size_t n = mps.n();

    std::size_t total = 1;
    std::vector<std::size_t> shape(n);
    for (std::size_t k = 0; k < n; ++k) {
        shape[k] = mps.phys_dim(k);
        if (total > max_total_dim / shape[k])
            throw std::invalid_argument("statevector dimension exceeds the configured limit");
        total *= shape[k];
    }

    const std::vector<Complex>* l = nullptr;
    const std::vector<Complex>* r = nullptr;
    switch (mps.boundary.kind) {
        case BoundaryKind::open:
            if (left != nullptr || right != nullptr)
                throw std::invalid_argument("open boundary takes no explicit boundary vectors");
            l = &mps.boundary.left;
            r = &mps.boundary.right;
            break;
        case BoundaryKind::variable:
            if (left == nullptr || right == nullptr)
                throw std::invalid_argument("variable boundary requires explicit vectors");
            if (left->size() != mps.bond_left(0) || right->size() != mps.bond_right(n - 1))
                throw std::invalid_argument("boundary vector extent does not match bond");
            l = left;
            r = right;
            break;
        case BoundaryKind::periodic:
            if (left != nullptr || right != nullptr)
                throw std::invalid_argument("periodic boundary takes no explicit vectors");
            break;
    }

    Tensor out(shape);

    if (mps.boundary.kind == BoundaryKind::periodic) {
        // Amplitude = Tr[prod_k A^[k]_{i_k}]: carry the running product matrix
        // for every physical prefix.
        const std::size_t d0 = mps.bond_left(0);
        std::vector<RowMajorMatrix> running{RowMajorMatrix::Identity(
            static_cast<Eigen::Index>(d0), static_cast<Eigen::Index>(d0))};
        for (std::size_t k = 0; k < n; ++k) {
            const Tensor& site = mps.sites[k];
            const std::size_t dp = mps.phys_dim(k);
            const std::size_t dl = mps.bond_left(k), dr = mps.bond_right(k);
            std::vector<RowMajorMatrix> next(running.size() * dp);
            for (std::size_t prefix = 0; prefix < running.size(); ++prefix) {
                for (std::size_t i = 0; i < dp; ++i) {
                    Eigen::Map<const RowMajorMatrix> a(site.entries().data() + i * dl * dr,
                                                       static_cast<Eigen::Index>(dl),
                                                       static_cast<Eigen::Index>(dr));
                    next[prefix * dp + i] = running[prefix] * a;
                }
            }
            running = std::move(next);
        }
        for (std::size_t flat = 0; flat < total; ++flat) out[flat] = running[flat].trace();
        return out;
    }

    // Open/variable boundary: fold left vector through the chain.
    VectorXc row = Eigen::Map<const VectorXc>(l->data(), static_cast<Eigen::Index>(l->size()));
    std::vector<VectorXc> running{row};
    for (std::size_t k = 0; k < n; ++k) {
        const Tensor& site = mps.sites[k];
        const std::size_t dp = mps.phys_dim(k);
        const std::size_t dl = mps.bond_left(k), dr = mps.bond_right(k);
        std::vector<VectorXc> next(running.size() * dp);
        for (std::size_t prefix = 0; prefix < running.size(); ++prefix) {
            for (std::size_t i = 0; i < dp; ++i) {
                Eigen::Map<const RowMajorMatrix> a(site.entries().data() + i * dl * dr,
                                                   static_cast<Eigen::Index>(dl),
                                                   static_cast<Eigen::Index>(dr));
                next[prefix * dp + i] = a.transpose() * running[prefix];
            }
        }
        running = std::move(next);
    }
    // Plain bilinear pairing with R; nothing is conjugated.
    Eigen::Map<const VectorXc> rv(r->data(), static_cast<Eigen::Index>(r->size()));
    for (std::size_t flat = 0; flat < total; ++flat)
        out[flat] = running[flat].cwiseProduct(rv).sum();
    return out;
}

Mps build_simps(const Tensor& site, std::size_t n, Boundary boundary) {
    if (site.order() != 3 || site.shape()[1] != site.shape()[2])
        throw std::invalid_argument("site tensor must have legs (d_p, d_c, d_c)");
    Mps mps;
    mps.sites.assign(n, site);
    mps.boundary = std::move(boundary);
    mps.validate();
    return mps;
}

Mps linear_combination(const std::vector<std::pair<Complex, Mps>>& terms) {
    if (terms.empty()) throw std::invalid_argument("linear combination of no terms");
    const std::size_t n = terms.front().second.n();
    const BoundaryKind kind = terms.front().second.boundary.kind;
    if (kind == BoundaryKind::variable)
        throw std::invalid_argument("linear combination needs open or periodic boundaries");
    for (const auto& [c, term] : terms) {
        (void)c;
        term.validate();
        if (term.n() != n) throw std::invalid_argument("terms must share the site count");
        if (term.boundary.kind != kind)
            throw std::invalid_argument("terms must share the boundary kind");
        for (std::size_t k = 0; k < n; ++k)
            if (term.phys_dim(k) != terms.front().second.phys_dim(k))
                throw std::invalid_argument("terms must share physical dimensions");
    }
    if (terms.size() == 1 && terms.front().first == Complex(1.0)) return terms.front().second;

    // Block-diagonal site tensors: bond extents add across terms, so the
    // resulting bond at each cut is at most t * max bond. Coefficients are
    // absorbed into the rightmost block column (open) or the first site
    // (periodic), where trace additivity over blocks does the sum.
    Mps out;
    out.boundary = kind == BoundaryKind::open
                       ? Boundary::open({}, {})
                       : Boundary::periodic();

    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t dp = terms.front().second.phys_dim(k);
        std::size_t dl = 0, dr = 0;
        for (const auto& [c, term] : terms) {
            (void)c;
            dl += term.bond_left(k);
            dr += term.bond_right(k);
        }
        Tensor site({dp, dl, dr});
        std::size_t off_l = 0, off_r = 0;
        for (const auto& [c, term] : terms) {
            const Tensor& block = term.sites[k];
            const Complex scale = (kind == BoundaryKind::periodic && k == 0) ? c : Complex(1.0);
            for (std::size_t i = 0; i < dp; ++i)
                for (std::size_t a = 0; a < term.bond_left(k); ++a)
                    for (std::size_t b = 0; b < term.bond_right(k); ++b)
                        site.at(i, off_l + a, off_r + b) = scale * block.at(i, a, b);
            off_l += term.bond_left(k);
            off_r += term.bond_right(k);
        }
        out.sites.push_back(std::move(site));
    }

    if (kind == BoundaryKind::open) {
        for (const auto& [c, term] : terms) {
            for (const Complex& v : term.boundary.left) out.boundary.left.push_back(v);
            for (const Complex& v : term.boundary.right) out.boundary.right.push_back(c * v);
        }
    }
    out.validate();
    return out;
}

Mps random_mps(std::size_t n, std::size_t d_p, std::size_t d_c, std::uint64_t seed) {
    if (n < 1 || d_p < 1 || d_c < 1) throw std::invalid_argument("dimensions must be positive");
    RandomStream rng(seed);
    Mps mps;
    mps.boundary = Boundary::variable();
    for (std::size_t k = 0; k < n; ++k) mps.sites.push_back(rng.tensor({d_p, d_c, d_c}));
    return mps;
}

Complex mps_overlap(const Mps& a, const Mps& b) {
    a.validate();
    b.validate();
    if (a.n() != b.n()) throw std::invalid_argument("overlap needs equal site counts");
    if (a.boundary.kind == BoundaryKind::variable || b.boundary.kind == BoundaryKind::variable)
        throw std::invalid_argument("overlap needs open or periodic boundaries");
    const std::size_t n = a.n();
    for (std::size_t k = 0; k < n; ++k)
        if (a.phys_dim(k) != b.phys_dim(k))
            throw std::invalid_argument("overlap needs matching physical dimensions");

    // Transfer matrix per site: E = sum_i conj(A_i) (x) B_i.
    auto transfer = [](const Tensor& sa, const Tensor& sb) {
        const std::size_t dp = sa.shape()[0];
        const std::size_t al = sa.shape()[1], ar = sa.shape()[2];
        const std::size_t bl = sb.shape()[1], br = sb.shape()[2];
        RowMajorMatrix e = RowMajorMatrix::Zero(static_cast<Eigen::Index>(al * bl),
                                                static_cast<Eigen::Index>(ar * br));
        for (std::size_t i = 0; i < dp; ++i)
            for (std::size_t p = 0; p < al; ++p)
                for (std::size_t q = 0; q < ar; ++q)
                    for (std::size_t u = 0; u < bl; ++u)
                        for (std::size_t v = 0; v < br; ++v)
                            e(static_cast<Eigen::Index>(p * bl + u),
                              static_cast<Eigen::Index>(q * br + v)) +=
                                std::conj(sa.at(i, p, q)) * sb.at(i, u, v);
        return e;
    };

    if (a.boundary.kind == BoundaryKind::periodic || b.boundary.kind == BoundaryKind::periodic) {
        if (a.boundary.kind != b.boundary.kind)
            throw std::invalid_argument("overlap needs matching boundary kinds");
        RowMajorMatrix prod = transfer(a.sites[0], b.sites[0]);
        for (std::size_t k = 1; k < n; ++k) prod = prod * transfer(a.sites[k], b.sites[k]);
        return prod.trace();
    }

    // conj(amplitude_a) uses conjugated boundaries of a.
    VectorXc row(static_cast<Eigen::Index>(a.bond_left(0) * b.bond_left(0)));
    for (std::size_t p = 0; p < a.bond_left(0); ++p)
        for (std::size_t u = 0; u < b.bond_left(0); ++u)
            row(static_cast<Eigen::Index>(p * b.bond_left(0) + u)) =
                std::conj(a.boundary.left[p]) * b.boundary.left[u];
    for (std::size_t k = 0; k < n; ++k)
        row = transfer(a.sites[k], b.sites[k]).transpose() * row;
    Complex total = 0.0;
    const std::size_t ar = a.bond_right(n - 1), br = b.bond_right(n - 1);
    for (std::size_t q = 0; q < ar; ++q)
        for (std::size_t v = 0; v < br; ++v)
            total += row(static_cast<Eigen::Index>(q * br + v)) *
                     std::conj(a.boundary.right[q]) * b.boundary.right[v];
    return total;
}

}  // namespace tncomp
