#pragma once

#include "tncomp/tensor.hpp"

#include <cstddef>
#include <vector>

namespace tncomp {

/// Rank threshold shared by every numerical-rank decision in the library:
/// singular values (or eigenvalues) below rel_tol times the largest one are
/// treated as zero.
inline constexpr double kDefaultRankTol = 1e-10;

struct SvdResult {
    Tensor u;                             // thin U, columns orthonormal
    std::vector<double> singular_values;  // non-increasing
    Tensor v_dagger;                      // thin V^dag, rows orthonormal
    std::size_t numerical_rank = 0;

    /// First numerical_rank columns of u: the isometry onto the column space.
    Tensor support_isometry() const;
};

/// Thin SVD of a matrix (order-2 tensor) with a relative rank cutoff.
/// Throws std::invalid_argument for non-matrix input or rel_tol outside
/// (0,1), and std::runtime_error if the decomposition fails to converge.
SvdResult svd_support(const Tensor& m, double rel_tol = kDefaultRankTol);

}  // namespace tncomp
