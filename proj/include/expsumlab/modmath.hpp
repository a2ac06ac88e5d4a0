#pragma once

// Exact modular arithmetic on word-sized operands: deterministic primality,
// factorization, powers with signed exponents, multiplicative orders and
// primitive-root search. All products go through 128-bit intermediates.

#include "expsumlab/common.hpp"

#include <vector>

namespace esl {

inline u64 add_mod(u64 a, u64 b, u64 m) {
    u64 s = a + b;  // a, b < m <= 2^63 assumed by callers with m from Limits
    return (s >= m || s < a) ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) {
    return a >= b ? a - b : a + m - b;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return u64(u128(a) * b % m);
}

u64 pow_mod(u64 b, u64 e, u64 m);

// representative of x in [0, m)
inline u64 reduce_signed(i64 x, u64 m) {
    i64 r = x % i64(m);
    return r < 0 ? u64(r + i64(m)) : u64(r);
}

// Deterministic Miller-Rabin; the witness set covers all n < 2^64.
bool is_prime(u64 n);

// Sorted prime multiset of n, 2 <= n < 2^63. Trial division to 10^6, then a
// deterministic Brent-cycle split on what remains.
std::vector<u64> factorize(u64 n);
std::vector<u64> distinct_prime_factors(u64 n);

u64 mod_inverse(u64 a, u64 m);             // extended Euclid; gcd(a, m) = 1
u64 mod_pow_signed(u64 b, i64 e, u64 p);   // e < 0 means powers of the inverse
u64 multiplicative_order(u64 p, u64 g);    // least T > 0 with g^T = 1 mod p
u64 find_primitive_root(u64 p);            // smallest g of order p-1

// Anchor of all arithmetic: an odd prime p, a base g coprime to p, the
// multiplicative order T of g, and the inverse of g. Immutable once built,
// safe to share across threads.
class PrimeContext {
public:
    PrimeContext(u64 p, u64 g, const Limits& lim = {});

    u64 p() const { return p_; }
    u64 g() const { return g_; }
    u64 order() const { return T_; }
    u64 g_inv() const { return g_inv_; }
    bool is_primitive() const { return T_ == p_ - 1; }

    u64 pow_g(i64 e) const;  // g^e mod p, signed exponent

private:
    u64 p_, g_, T_, g_inv_;
};

}  // namespace esl
