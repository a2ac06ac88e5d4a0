#include "expsumlab/ntt.hpp"

#include "expsumlab/modmath.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace esl::ntt {

namespace {

constexpr int kTwoAdicity = 28;
constexpr std::size_t kMaxLen = std::size_t(1) << kTwoAdicity;

// Scan q = a*2^28 + 1 upward from a = 2^33 + 1 (odd a only), keeping primes.
// Moduli land near 2^61, leaving headroom for 128-bit products.
std::vector<Prime>& pool_grow(std::size_t count) {
    static std::vector<Prime> pool;
    static u64 next_a = (u64(1) << 33) + 1;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (pool.size() < count) {
        const u64 q = (next_a << kTwoAdicity) + 1;
        if (is_prime(q)) pool.push_back({q, find_primitive_root(q)});
        next_a += 2;
    }
    return pool;
}

struct RootTable {
    u64 q = 0;
    std::size_t n = 0;
    std::vector<u64> fwd;   // w^i for w of order n
    std::vector<u64> inv;   // w^{-i}
    std::vector<u64> n_inv_by_log;
};

// per-prime twiddle cache; thread_local keeps concurrent experiments apart
RootTable& root_table(const Prime& P, std::size_t n) {
    static thread_local std::vector<RootTable> tabs;
    RootTable* hit = nullptr;
    for (auto& t : tabs) {
        if (t.q == P.q) {
            hit = &t;
            break;
        }
    }
    if (hit == nullptr) hit = &tabs.emplace_back();
    RootTable& t = *hit;
    if (t.q == P.q && t.n >= n) return t;
    t.q = P.q;
    t.n = std::max(n, t.n);
    const u64 w = pow_mod(P.root, (P.q - 1) / t.n, P.q);
    const u64 wi = mod_inverse(w, P.q);
    t.fwd.assign(t.n, 1);
    t.inv.assign(t.n, 1);
    for (std::size_t i = 1; i < t.n; ++i) {
        t.fwd[i] = mul_mod(t.fwd[i - 1], w, P.q);
        t.inv[i] = mul_mod(t.inv[i - 1], wi, P.q);
    }
    int logn = 0;
    while ((std::size_t(1) << logn) < t.n) ++logn;
    t.n_inv_by_log.assign(std::size_t(logn) + 1, 1);
    for (int k = 0; k <= logn; ++k) t.n_inv_by_log[std::size_t(k)] = mod_inverse(u64(1) << k, P.q);
    return t;
}

}  // namespace

const Prime& prime(std::size_t index) {
    return pool_grow(index + 1)[index];
}

std::size_t primes_needed(const BigUint& bound) {
    BigUint prod(1);
    std::size_t r = 0;
    while (prod <= bound) {
        prod *= BigUint(prime(r).q);
        ++r;
    }
    return std::max<std::size_t>(r, 1);
}

void transform(std::vector<u64>& a, const Prime& P, bool invert) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0 || n > kMaxLen)
        throw std::invalid_argument("ntt::transform: length must be a power of two <= 2^28");
    if (n == 1) return;
    const u64 q = P.q;
    RootTable& t = root_table(P, n);

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const std::vector<u64>& roots = invert ? t.inv : t.fwd;
    const std::size_t stride_base = t.n;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t step = stride_base / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const u64 u = a[i + j];
                const u64 v = mul_mod(roots[j * step], a[i + j + half], q);
                a[i + j] = add_mod(u, v, q);
                a[i + j + half] = sub_mod(u, v, q);
            }
        }
    }

    if (invert) {
        int logn = 0;
        while ((std::size_t(1) << logn) < n) ++logn;
        const u64 n_inv = t.n_inv_by_log[std::size_t(logn)];
        for (u64& x : a) x = mul_mod(x, n_inv, q);
    }
}

std::vector<u64> convolve_cyclic(std::vector<u64> a, std::vector<u64> b, const Prime& P) {
    if (a.size() != b.size()) throw std::invalid_argument("ntt::convolve_cyclic: length mismatch");
    transform(a, P, false);
    transform(b, P, false);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = mul_mod(a[i], b[i], P.q);
    transform(a, P, true);
    return a;
}

}  // namespace esl::ntt
