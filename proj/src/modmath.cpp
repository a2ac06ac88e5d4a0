#include "expsumlab/modmath.hpp"

#include <algorithm>
#include <numeric>

namespace esl {

u64 pow_mod(u64 b, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // first twelve primes: a proven witness set for n < 3.3 * 10^24
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent's cycle variant with fixed start and increment sequence, so the
// factor found for a given n never varies between runs.
u64 brent_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 ys = y;
        const u64 m = 128;
        u64 r = 1, q = 1;
        auto step = [&](u64 v) { return add_mod(mul_mod(v, v, n), c % n, n); };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = step(y);
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                const u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = step(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        } while (d == 1);
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = step(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
        // cycle collapsed for this c; retry with the next increment
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = brent_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<u64> factorize(u64 n) {
    if (n < 2 || n >= (u64(1) << 63)) throw std::invalid_argument("factorize: need 2 <= n < 2^63");
    std::vector<u64> out;
    for (u64 q : {2ULL, 3ULL, 5ULL}) {
        while (n % q == 0) {
            out.push_back(q);
            n /= q;
        }
    }
    for (u64 q = 7; q <= 1000000 && q * q <= n; q += 6) {
        for (u64 d : {q, q + 4}) {
            while (n % d == 0) {
                out.push_back(d);
                n /= d;
            }
        }
    }
    if (n > 1) factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> distinct_prime_factors(u64 n) {
    auto f = factorize(n);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

u64 mod_inverse(u64 a, u64 m) {
    a %= m;
    if (a == 0) throw std::invalid_argument("mod_inverse: argument divisible by modulus");
    i64 t = 0, new_t = 1;
    i64 r = i64(m), new_r = i64(a);
    while (new_r != 0) {
        i64 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return t < 0 ? u64(t + i64(m)) : u64(t);
}

u64 mod_pow_signed(u64 b, i64 e, u64 p) {
    b %= p;
    if (e >= 0) return pow_mod(b, u64(e), p);
    if (b == 0) throw std::invalid_argument("mod_pow_signed: negative exponent of 0 mod p");
    return pow_mod(mod_inverse(b, p), u64(-(e + 1)) + 1, p);
}

u64 multiplicative_order(u64 p, u64 g) {
    g %= p;
    if (g == 0) throw std::invalid_argument("multiplicative_order: g divisible by p");
    // start from p-1 and strip prime factors while the power stays 1
    u64 T = p - 1;
    for (u64 q : distinct_prime_factors(p - 1)) {
        while (T % q == 0 && pow_mod(g, T / q, p) == 1) T /= q;
    }
    return T;
}

u64 find_primitive_root(u64 p) {
    if (p < 3) throw std::invalid_argument("find_primitive_root: need p >= 3");
    const auto qs = distinct_prime_factors(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : qs) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("find_primitive_root: no generator found");  // unreachable for prime p
}

PrimeContext::PrimeContext(u64 p, u64 g, const Limits& lim) : p_(p) {
    if (p > lim.max_prime) throw UnsupportedSizeError("PrimeContext: p exceeds configured cap");
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("PrimeContext: p must be an odd prime");
    g_ = g % p;
    if (g_ == 0) throw std::invalid_argument("PrimeContext: g must be coprime to p");
    T_ = multiplicative_order(p_, g_);
    g_inv_ = mod_inverse(g_, p_);
}

u64 PrimeContext::pow_g(i64 e) const {
    if (e >= 0) return pow_mod(g_, u64(e), p_);
    return pow_mod(g_inv_, u64(-(e + 1)) + 1, p_);
}

}  // namespace esl
