#include <doctest.h>

#include <random>
#include <set>

#include "expsumlab/modmath.hpp"

using namespace esl;

TEST_CASE("primality: small knowns and structured composites") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(101));
    CHECK(is_prime(1009));
    CHECK(is_prime(99991));
    CHECK(is_prime(u64(1000003)));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(91));           // 7 * 13
    CHECK_FALSE(is_prime(561));          // Carmichael
    CHECK_FALSE(is_prime(3215031751u));  // strong pseudoprime to bases 2,3,5,7
    // large prime near 2^61 (an NTT-style modulus)
    CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1, Mersenne
}

TEST_CASE("factorize returns the sorted prime multiset") {
    CHECK(factorize(12) == std::vector<u64>{2, 2, 3});
    CHECK(factorize(101) == std::vector<u64>{101});
    CHECK(factorize(1008) == std::vector<u64>{2, 2, 2, 2, 3, 3, 7});
    CHECK(factorize(2) == std::vector<u64>{2});
    CHECK(distinct_prime_factors(1008) == std::vector<u64>{2, 3, 7});

    // product of two ~20-bit primes exercises the rho stage
    const u64 a = 1000003, b = 1000033;
    CHECK(factorize(a * b) == std::vector<u64>{a, b});

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const u64 n = 2 + rng_below(rng, 1u << 20);
        u64 prod = 1;
        u64 prev = 0;
        for (u64 q : factorize(n)) {
            CHECK(is_prime(q));
            CHECK(q >= prev);
            prev = q;
            prod *= q;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("modular powers, signed exponents, inverses") {
    CHECK(pow_mod(3, 2, 7) == 2);
    CHECK(pow_mod(3, 0, 7) == 1);
    CHECK(pow_mod(0, 5, 7) == 0);
    CHECK(mod_pow_signed(3, -1, 7) == 5);  // 3*5 = 15 = 1 mod 7
    CHECK(mod_pow_signed(3, -2, 7) == 4);  // 5^2 = 25 = 4
    CHECK(mod_pow_signed(3, 6, 7) == 1);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(1, 2) == 1);
    CHECK_THROWS_AS(mod_inverse(0, 7), std::invalid_argument);

    CHECK(reduce_signed(-1, 7) == 6);
    CHECK(reduce_signed(-7, 7) == 0);
    CHECK(reduce_signed(13, 7) == 6);
    CHECK(reduce_signed(0, 7) == 0);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const u64 p = 101;
        const u64 a = 1 + rng_below(rng, p - 1);
        CHECK(mul_mod(a, mod_inverse(a, p), p) == 1);
        const i64 e = rng_range(rng, -200, 200);
        // g^e * g^{-e} = 1
        CHECK(mul_mod(mod_pow_signed(a, e, p), mod_pow_signed(a, -e, p), p) == 1);
    }
}

TEST_CASE("multiplicative orders and primitive roots") {
    CHECK(multiplicative_order(7, 3) == 6);
    CHECK(multiplicative_order(7, 2) == 3);
    CHECK(multiplicative_order(7, 6) == 2);
    CHECK(multiplicative_order(7, 1) == 1);
    CHECK(find_primitive_root(7) == 3);
    CHECK(find_primitive_root(11) == 2);
    CHECK(find_primitive_root(3) == 2);

    // order divides p-1, and g^order = 1 with no smaller witness among divisors
    for (u64 p : {u64(101), u64(211), u64(1009)}) {
        const u64 g = find_primitive_root(p);
        CHECK(multiplicative_order(p, g) == p - 1);
        for (u64 b = 1; b < 20; ++b) {
            const u64 T = multiplicative_order(p, b % p == 0 ? 1 : b % p);
            CHECK((p - 1) % T == 0);
        }
    }
}

TEST_CASE("PrimeContext validates and exposes the anchor") {
    const PrimeContext ctx(7, 3);
    CHECK(ctx.p() == 7);
    CHECK(ctx.g() == 3);
    CHECK(ctx.order() == 6);
    CHECK(ctx.g_inv() == 5);
    CHECK(ctx.is_primitive());
    CHECK(ctx.pow_g(0) == 1);
    CHECK(ctx.pow_g(1) == 3);
    CHECK(ctx.pow_g(-1) == 5);
    CHECK(ctx.pow_g(100) == pow_mod(3, 100 % 6, 7));
    CHECK(ctx.pow_g(-100) == mod_pow_signed(3, -100, 7));

    const PrimeContext sub(7, 2);  // order 3, not primitive
    CHECK(sub.order() == 3);
    CHECK_FALSE(sub.is_primitive());

    CHECK_THROWS_AS(PrimeContext(8, 3), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(PrimeContext(2, 1), std::invalid_argument);   // not odd
    CHECK_THROWS_AS(PrimeContext(7, 0), std::invalid_argument);   // g = 0 mod p
    CHECK_THROWS_AS(PrimeContext(7, 7), std::invalid_argument);   // g = 0 mod p
    Limits tight;
    tight.max_prime = 100;
    CHECK_THROWS_AS(PrimeContext(101, 2, tight), UnsupportedSizeError);
}

TEST_CASE("seeded draw helpers are in range and deterministic") {
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        const u64 x = rng_below(a, 17);
        CHECK(x < 17);
        CHECK(x == rng_below(b, 17));
    }
    std::mt19937_64 c(43), d(43);
    for (int i = 0; i < 1000; ++i) {
        const i64 x = rng_range(c, -5, 5);
        CHECK(x >= -5);
        CHECK(x <= 5);
        CHECK(x == rng_range(d, -5, 5));
        const double f = rng_unit(c);
        CHECK(f >= 0.0);
        CHECK(f < 1.0);
        CHECK(f == rng_unit(d));
    }
}
