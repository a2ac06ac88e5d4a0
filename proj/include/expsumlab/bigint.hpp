#pragma once

// Minimal unsigned big integer: little-endian 64-bit limbs, canonical form
// (no trailing zero limbs). Sized for exact masses and counts of k-fold
// convolutions, not for general-purpose arithmetic.

#include "expsumlab/common.hpp"

#include <compare>
#include <span>
#include <vector>

namespace esl {

class BigUint {
public:
    BigUint() = default;
    BigUint(u64 v);  // NOLINT(google-explicit-constructor): numeric literal ergonomics
    static BigUint from_u128(u128 v);
    static BigUint from_limbs(std::span<const u64> limbs);  // trims trailing zeros

    bool is_zero() const { return limbs_.empty(); }
    const std::vector<u64>& limbs() const { return limbs_; }
    std::size_t limb_count() const { return limbs_.size(); }
    u64 bit_length() const;

    BigUint& operator+=(const BigUint& rhs);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) { lhs += rhs; return lhs; }
    friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);
    BigUint& operator*=(const BigUint& rhs) { *this = *this * rhs; return *this; }

    friend bool operator==(const BigUint&, const BigUint&) = default;
    std::strong_ordering operator<=>(const BigUint& rhs) const;

    u64 mod_u64(u64 m) const;
    double to_double() const;
    std::string to_string() const;  // decimal

    // value reduced mod m, reading limbs most significant first
    static u64 span_mod_u64(std::span<const u64> limbs, u64 m);

private:
    void trim();
    std::vector<u64> limbs_;
};

}  // namespace esl
