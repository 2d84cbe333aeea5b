#include "tncomp/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tncomp {

const char* bound_case_name(BoundCase c) {
    switch (c) {
        case BoundCase::mps_boundary: return "mps_boundary";
        case BoundCase::simps: return "simps";
        case BoundCase::peps_boundary: return "peps_boundary";
        case BoundCase::simps_peps: return "simps_peps";
        case BoundCase::ug_fixed_state: return "ug_fixed_state";
        case BoundCase::ug_tns: return "ug_tns";
        case BoundCase::ug_mps_boundary: return "ug_mps_boundary";
        case BoundCase::ug_peps_boundary: return "ug_peps_boundary";
    }
    throw std::invalid_argument("unknown bound case");
}

namespace {

// One formula = sum of coeff * log2(arg) terms, with half-integer
// coefficients stored as numerator over 2. Keeping the terms symbolic lets
// qubit rounding go through exact integer arithmetic whenever every
// argument is a power of two.
struct LogTerm {
    std::uint64_t coeff_num2 = 0;  // coefficient = coeff_num2 / 2
    std::uint64_t arg = 1;
};

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::uint64_t exact_log2(std::uint64_t v) {
    std::uint64_t k = 0;
    while (v > 1) {
        v >>= 1;
        ++k;
    }
    return k;
}

double bits_of(const std::vector<LogTerm>& terms, double extra_bits) {
    double bits = extra_bits;
    for (const LogTerm& t : terms)
        bits += static_cast<double>(t.coeff_num2) / 2.0 * std::log2(static_cast<double>(t.arg));
    return bits;
}

std::uint64_t qubits_of(const std::vector<LogTerm>& terms, double bits, double extra_bits) {
    bool all_pow2 = extra_bits == 0.0;
    for (const LogTerm& t : terms) all_pow2 = all_pow2 && is_power_of_two(t.arg);
    if (all_pow2) {
        // bits = (sum coeff_num2 * log2(arg)) / 2 exactly.
        std::uint64_t twice = 0;
        for (const LogTerm& t : terms) twice += t.coeff_num2 * exact_log2(t.arg);
        return twice / 2 + (twice % 2 != 0 ? 1 : 0);
    }
    if (bits <= 0.0) return 0;
    return static_cast<std::uint64_t>(std::ceil(bits - 1e-9));
}

}  // namespace

BoundResult table1_bound(const BoundQuery& q) {
    if (q.n < 1 || q.m < 1 || q.d_p < 1 || q.d_c < 1)
        throw std::invalid_argument("site counts and dimensions must be >= 1");

    std::vector<LogTerm> terms;
    double extra = 0.0;
    const std::uint64_t schur_num2 = q.d_p * q.d_p + q.d_p - 2;  // always even coefficient * 2

    switch (q.kase) {
        case BoundCase::mps_boundary:
            terms.push_back({4, q.d_c});
            break;
        case BoundCase::simps: {
            const std::uint64_t D = q.d_c * q.d_c * q.d_p;
            terms.push_back({2 * (D - 1), q.n + D - 1});
            terms.push_back({4, q.d_c});
            break;
        }
        case BoundCase::peps_boundary:
            terms.push_back({2 * (2 * q.n + 2 * q.m), q.d_c});
            break;
        case BoundCase::simps_peps: {
            const std::uint64_t D = q.d_c * q.d_c * q.d_c * q.d_c * q.d_p;
            terms.push_back({2 * (D - 1), q.n * q.m + D - 1});
            terms.push_back({2 * (2 * q.n + 2 * q.m), q.d_c});
            break;
        }
        case BoundCase::ug_fixed_state:
            terms.push_back({schur_num2, q.n + q.d_p - 1});
            break;
        case BoundCase::ug_tns:
            terms.push_back({schur_num2, q.n + q.d_p - 1});
            extra = q.extra_bits;
            break;
        case BoundCase::ug_mps_boundary:
            terms.push_back({schur_num2, q.n + q.d_p - 1});
            terms.push_back({4, q.d_c});
            break;
        case BoundCase::ug_peps_boundary:
            terms.push_back({schur_num2, q.n * q.m + q.d_p - 1});
            terms.push_back({2 * (2 * q.n + 2 * q.m), q.d_c});
            break;
    }

    BoundResult out;
    out.bits = bits_of(terms, extra);
    out.qubits = qubits_of(terms, out.bits, extra);
    return out;
}

BigUint symmetric_subspace_dim(std::uint64_t n, std::uint64_t D) {
    if (D < 1) throw std::invalid_argument("space dimension must be >= 1");
    // binom(n + D - 1, D - 1) as a product of exact integer steps: the
    // running value after k steps is binom(n + k, k), so every division is
    // exact.
    BigUint result(1);
    for (std::uint64_t k = 1; k <= D - 1; ++k) {
        if (k > 0xffffffffull) throw std::invalid_argument("space dimension too large");
        result *= (n + k);
        result.divide_exact(static_cast<std::uint32_t>(k));
    }
    return result;
}

double schur_dim_bound(std::uint64_t n, std::uint64_t d, std::uint64_t r) {
    if (r < 1 || r > d) throw std::invalid_argument("need 1 <= r <= d");
    // Exponent (2dr - r^2 + r - 2) / 2 is always integral times 1/2 of an
    // even number: 2dr is even and r^2 - r is even.
    const std::uint64_t num = 2 * d * r + r - r * r - 2;
    return static_cast<double>(num) / 2.0 * std::log2(static_cast<double>(n + d - 1));
}

}  // namespace tncomp
