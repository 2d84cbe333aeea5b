#pragma once

#include "tncomp/tensor.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tncomp {

enum class BoundaryKind { open, periodic, variable };

struct Boundary {
    BoundaryKind kind = BoundaryKind::variable;
    std::vector<Complex> left;   // used when kind == open
    std::vector<Complex> right;  // used when kind == open

    static Boundary open(std::vector<Complex> l, std::vector<Complex> r) {
        return {BoundaryKind::open, std::move(l), std::move(r)};
    }
    static Boundary periodic() { return {BoundaryKind::periodic, {}, {}}; }
    static Boundary variable() { return {BoundaryKind::variable, {}, {}}; }
};

/// Matrix product state. Site tensors have legs (physical, left bond, right
/// bond); adjacent bond extents must match, and both physical and bond
/// extents may vary along the chain. States are never normalised internally.
struct Mps {
    std::vector<Tensor> sites;
    Boundary boundary;

    std::size_t n() const { return sites.size(); }
    std::size_t phys_dim(std::size_t k) const { return sites[k].shape()[0]; }
    std::size_t bond_left(std::size_t k) const { return sites[k].shape()[1]; }
    std::size_t bond_right(std::size_t k) const { return sites[k].shape()[2]; }

    /// Throws std::invalid_argument when the chain is malformed.
    void validate() const;
};

/// Amplitudes of the full state as an order-n tensor, one leg per site.
/// With periodic boundary the site matrices are traced; with variable
/// boundary explicit vectors must be supplied. Amplitudes are
/// sum_a L[a] (prod_k A^[k]_{i_k})_{a,b} R[b]: the left vector enters as a
/// plain transpose, never conjugated.
Tensor eval_statevector(const Mps& mps, const std::vector<Complex>* left = nullptr,
                        const std::vector<Complex>* right = nullptr,
                        std::size_t max_total_dim = std::size_t{1} << 22);

/// n copies of one site tensor with legs (d_p, d_c, d_c).
Mps build_simps(const Tensor& site, std::size_t n, Boundary boundary);

/// Exact linear combination of MPSs sharing site count and physical
/// dimensions, realised by block-diagonal site tensors; the bond extent at
/// each internal cut is the sum of the terms' bond extents. Supports open
/// and periodic boundaries.
Mps linear_combination(const std::vector<std::pair<Complex, Mps>>& terms);

/// Variable-boundary MPS with i.i.d. complex standard normal site entries,
/// deterministic per seed (entries drawn site by site, row-major).
Mps random_mps(std::size_t n, std::size_t d_p, std::size_t d_c, std::uint64_t seed);

/// <a|b> via transfer matrices; both states must share site count and
/// physical dimensions, with open or periodic boundaries.
Complex mps_overlap(const Mps& a, const Mps& b);

}  // namespace tncomp
