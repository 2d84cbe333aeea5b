#pragma once

#include "tncomp/bigint.hpp"

#include <cstdint>
#include <string>

namespace tncomp {

/// Closed-form memory-bound calculators for the standard state families.
/// All logarithms are base 2, so `bits` counts qubits before rounding.
enum class BoundCase {
    mps_boundary,      // 2 log d_c
    simps,             // (d_c^2 d_p - 1) log(n + d_c^2 d_p - 1) + 2 log d_c
    peps_boundary,     // (2n + 2m) log d_c
    simps_peps,        // (d_c^4 d_p - 1) log(nm + d_c^4 d_p - 1) + (2n+2m) log d_c
    ug_fixed_state,    // (d_p^2 + d_p - 2)/2 * log(n + d_p - 1)
    ug_tns,            // ug_fixed_state term + extra_bits (a precomputed min-cut)
    ug_mps_boundary,   // ug_fixed_state term + 2 log d_c
    ug_peps_boundary,  // (d_p^2+d_p-2)/2 * log(nm + d_p - 1) + (2n+2m) log d_c
};

const char* bound_case_name(BoundCase c);

struct BoundQuery {
    BoundCase kase = BoundCase::mps_boundary;
    std::uint64_t n = 1;
    std::uint64_t m = 1;
    std::uint64_t d_p = 1;
    std::uint64_t d_c = 1;
    double extra_bits = 0.0;  // only read for ug_tns
};

struct BoundResult {
    double bits = 0.0;
    std::uint64_t qubits = 0;
};

/// Evaluate the case's formula. qubits = ceil(bits), where integer-boundary
/// cases are resolved exactly whenever every log argument is a power of two
/// (the sum is then rational) and a 1e-9 guard is applied otherwise.
BoundResult table1_bound(const BoundQuery& query);

/// Exact dimension of the symmetric subspace of n copies of a D-dimensional
/// space: binom(n + D - 1, D - 1).
BigUint symmetric_subspace_dim(std::uint64_t n, std::uint64_t D);

/// Bits of the bound (n + d - 1)^((2dr - r^2 + r - 2)/2) on the total
/// dimension of the spaces carrying at-most-r-row Young diagrams.
double schur_dim_bound(std::uint64_t n, std::uint64_t d, std::uint64_t r);

}  // namespace tncomp
