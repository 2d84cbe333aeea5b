#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tncomp {

/// Unsigned big integer supporting exactly what exact cut-dimension
/// bookkeeping needs: products of edge dimensions, comparisons, ceil(log2)
/// and decimal printing. Stored as base-2^32 limbs, least significant first.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t value);  // NOLINT(google-explicit-constructor)

    BigUint& operator*=(std::uint64_t factor);
    BigUint operator*(std::uint64_t factor) const;
    BigUint& operator+=(const BigUint& other);

    /// Exact division by a small divisor; throws if a remainder is left.
    BigUint& divide_exact(std::uint32_t divisor);

    bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }
    bool operator<(const BigUint& other) const;
    bool operator<=(const BigUint& other) const { return *this < other || *this == other; }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    bool is_power_of_two() const;

    /// Number of bits in the binary representation; 0 for the value 0.
    std::size_t bit_length() const;

    /// ceil(log2(value)); value must be >= 1. Returns 0 for value 1.
    std::size_t ceil_log2() const;

    double log2_approx() const;

    std::string to_string() const;  // decimal

private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

}  // namespace tncomp
