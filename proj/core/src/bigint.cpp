#include "tncomp/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tncomp {

BigUint::BigUint(std::uint64_t value) {
    limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
    if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
}

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator*=(std::uint64_t factor) {
    if (factor == 0) {
        limbs_.assign(1, 0);
        return *this;
    }
    const std::uint64_t lo = factor & 0xffffffffu;
    const std::uint64_t hi = factor >> 32;

    std::vector<std::uint32_t> out(limbs_.size() + 3, 0);
    auto add_at = [&out](std::size_t pos, std::uint64_t value) {
        while (value != 0) {
            if (pos >= out.size()) out.push_back(0);
            std::uint64_t sum = static_cast<std::uint64_t>(out[pos]) + (value & 0xffffffffu);
            out[pos] = static_cast<std::uint32_t>(sum & 0xffffffffu);
            value = (value >> 32) + (sum >> 32);
            ++pos;
        }
    };
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const std::uint64_t limb = limbs_[i];
        add_at(i, limb * lo);
        if (hi != 0) add_at(i + 1, limb * hi);
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

BigUint BigUint::operator*(std::uint64_t factor) const {
    BigUint r = *this;
    r *= factor;
    return r;
}

BigUint& BigUint::operator+=(const BigUint& other) {
    const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < other.limbs_.size()) sum += other.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::divide_exact(std::uint32_t divisor) {
    if (divisor == 0) throw std::domain_error("division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    if (rem != 0) throw std::domain_error("division left a remainder");
    trim();
    return *this;
}

bool BigUint::operator<(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size()) return limbs_.size() < other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i];
    return false;
}

bool BigUint::is_power_of_two() const {
    bool found = false;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint32_t limb = limbs_[i];
        if (limb == 0) continue;
        if (found || (limb & (limb - 1)) != 0) return false;
        found = true;
    }
    return found;
}

std::size_t BigUint::bit_length() const {
    if (is_zero()) return 0;
    std::size_t bits = (limbs_.size() - 1) * 32;
    std::uint32_t top = limbs_.back();
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

std::size_t BigUint::ceil_log2() const {
    if (is_zero()) throw std::domain_error("ceil_log2 of zero");
    const std::size_t bits = bit_length();
    return is_power_of_two() ? bits - 1 : bits;
}

double BigUint::log2_approx() const {
    if (is_zero()) throw std::domain_error("log2 of zero");
    // Use the top 64 bits plus the exponent of the rest.
    const std::size_t bits = bit_length();
    if (bits <= 64) {
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return std::log2(static_cast<double>(v));
    }
    const std::size_t shift = bits - 53;
    // Extract the top 53 bits.
    std::uint64_t top = 0;
    for (std::size_t b = 0; b < 53; ++b) {
        const std::size_t bit = bits - 1 - b;
        const std::uint32_t limb = limbs_[bit / 32];
        const bool set = (limb >> (bit % 32)) & 1u;
        top = (top << 1) | (set ? 1u : 0u);
    }
    return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

std::string BigUint::to_string() const {
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    auto all_zero = [&work] {
        return std::all_of(work.begin(), work.end(), [](std::uint32_t l) { return l == 0; });
    };
    if (all_zero()) return "0";
    while (!all_zero()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 10);
            rem = cur % 10;
        }
        digits.push_back(static_cast<char>('0' + rem));
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace tncomp
