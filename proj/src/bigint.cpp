#include "expsumlab/bigint.hpp"

#include <algorithm>
#include <cmath>

namespace esl {

BigUint::BigUint(u64 v) {
    if (v != 0) limbs_.push_back(v);
}

BigUint BigUint::from_u128(u128 v) {
    BigUint r;
    if (v != 0) {
        r.limbs_.push_back(u64(v));
        if (u64 hi = u64(v >> 64); hi != 0) r.limbs_.push_back(hi);
    }
    return r;
}

BigUint BigUint::from_limbs(std::span<const u64> limbs) {
    BigUint r;
    r.limbs_.assign(limbs.begin(), limbs.end());
    r.trim();
    return r;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

u64 BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - u64(__builtin_clzll(limbs_.back())));
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 s = u128(limbs_[i]) + carry + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = u64(s);
        carry = u64(s >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
    BigUint r;
    if (lhs.is_zero() || rhs.is_zero()) return r;
    r.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            u128 cur = u128(lhs.limbs_[i]) * rhs.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = u64(cur);
            carry = u64(cur >> 64);
        }
        r.limbs_[i + rhs.limbs_.size()] += carry;
    }
    r.trim();
    return r;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

u64 BigUint::span_mod_u64(std::span<const u64> limbs, u64 m) {
    u128 r = 0;
    for (std::size_t i = limbs.size(); i-- > 0;) {
        r = ((r << 64) | limbs[i]) % m;
    }
    return u64(r);
}

u64 BigUint::mod_u64(u64 m) const {
    return span_mod_u64(limbs_, m);
}

double BigUint::to_double() const {
    double r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        r = r * 0x1.0p64 + double(limbs_[i]);
    }
    return r;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::vector<u64> work = limbs_;
    std::string out;
    constexpr u64 kChunk = 10000000000000000000ULL;  // 10^19
    while (!work.empty()) {
        u128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            u128 cur = (rem << 64) | work[i];
            work[i] = u64(cur / kChunk);
            rem = cur % kChunk;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        u64 digits = u64(rem);
        for (int d = 0; d < 19; ++d) {
            out.push_back(char('0' + digits % 10));
            digits /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace esl
