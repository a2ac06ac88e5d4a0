#include <doctest.h>

#include <algorithm>
#include <random>

#include "expsumlab/counting.hpp"
#include "support/oracles.hpp"

using namespace esl;

namespace {
const PrimeContext& ctx7() {
    static const PrimeContext c(7, 3);
    return c;
}
}  // namespace

TEST_CASE("RepFunction: increments, mass, width promotion") {
    RepFunction f(7);
    f.increment(3);
    f.increment(3);
    f.increment(0);
    CHECK(f.count64(3) == 2);
    CHECK(f.count64(0) == 1);
    CHECK(f.count64(1) == 0);
    CHECK(f.mass() == BigUint(3));
    CHECK(f.support() == std::vector<u64>{0, 3});
    CHECK(f.support_size() == 2);
    CHECK(f.sum_squares() == 5);

    RepFunction wide(5, 3);
    BigUint big = BigUint(~u64(0)) * BigUint(~u64(0));  // needs two limbs
    wide.set_entry(2, big);
    CHECK(wide.count(2) == big);
    CHECK_THROWS_AS(wide.count64(2), std::overflow_error);
    CHECK(wide.mass() == big);

    RepFunction narrow(5, 1);
    CHECK_THROWS_AS(narrow.set_entry(0, big), UnsupportedSizeError);

    Limits tight;
    tight.max_table_modulus = 4;
    CHECK_THROWS_AS(RepFunction(5, 1, tight), UnsupportedSizeError);
}

TEST_CASE("rep_function_product: frozen instances") {
    // x in {1,2}, exponents {1,2}: values 3, 2, 6, 4
    const RepFunction f = rep_function_product(ctx7(), Interval{0, 2}, ExponentBlock{0, 2});
    CHECK(f.mass() == BigUint(4));
    for (u64 t : {u64(2), u64(3), u64(4), u64(6)}) CHECK(f.count64(t) == 1);
    for (u64 t : {u64(0), u64(1), u64(5)}) CHECK(f.count64(t) == 0);

    // the single multiple of p puts all mass at zero
    const RepFunction z = rep_function_product(ctx7(), Interval{6, 1}, ExponentBlock{0, 1});
    CHECK(z.count64(0) == 1);
    CHECK(z.support_size() == 1);

    // full interval x full block over a primitive root covers uniformly
    const RepFunction u = rep_function_product(ctx7(), Interval{0, 6}, ExponentBlock{0, 6});
    CHECK(u.count64(0) == 0);
    for (u64 t = 1; t < 7; ++t) CHECK(u.count64(t) == 6);
    CHECK(u.mass() == BigUint(36));
}

TEST_CASE("mult_energy: frozen values, diagonal floor, bound terms present") {
    const EnergyReport e1 = mult_energy(ctx7(), Interval{0, 2}, ExponentBlock{0, 2});
    CHECK(e1.value == 4);
    CHECK(e1.diagonal == 4);
    CHECK(e1.bound_terms.size() == 4);
    CHECK(e1.bound_total > 0);
    CHECK(e1.ratio > 0);

    const EnergyReport e2 = mult_energy(ctx7(), Interval{0, 6}, ExponentBlock{0, 6});
    CHECK(e2.value == 216);
    CHECK(e2.diagonal == 36);
}

TEST_CASE("mult_energy_J0: frozen values and input validation") {
    const J0Report t = mult_energy_J0(ctx7(), 1, {1});
    CHECK(t.energy.value == 1);

    // H=2, U={1,2}: products {1,2,2,4}
    const J0Report r = mult_energy_J0(ctx7(), 2, {1, 2});
    CHECK(r.energy.value == 6);
    CHECK(r.energy.diagonal == 4);  // |U|*H
    CHECK(r.uu_size == 3);          // {1,2,4}
    CHECK(r.uu_small);

    CHECK_THROWS_AS(mult_energy_J0(ctx7(), 2, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(mult_energy_J0(ctx7(), 2, {7}), std::invalid_argument);  // 0 mod p
    CHECK_THROWS_AS(mult_energy_J0(ctx7(), 0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(mult_energy_J0(ctx7(), 2, {}), std::invalid_argument);
}

TEST_CASE("additive energy and pair-sum support: frozen values") {
    const EnergyReport e = additive_energy_geo(ctx7(), ExponentBlock{0, 6});
    CHECK(e.value == 186);  // r(0)=6, r(s!=0)=5: 36 + 6*25
    CHECK(e.diagonal == 36);

    const EnergyReport one = additive_energy_geo(ctx7(), ExponentBlock{0, 1});
    CHECK(one.value == 1);

    const PairSumSupportReport y = additive_rep_set_Y(ctx7(), ExponentBlock{0, 6});
    CHECK(y.size == 7);
    CHECK(y.cs_lower == doctest::Approx(6.0 * 6 * 6 * 6 / 186.0));

    const PairSumSupportReport y1 = additive_rep_set_Y(ctx7(), ExponentBlock{0, 1});
    CHECK(y1.size == 1);

    // |Y| >= M^4 / E_+ and mass identities, randomized
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        const PrimeContext ctx(211, find_primitive_root(211));
        const u64 M = 1 + rng_below(rng, 12);
        const i64 v = rng_range(rng, -20, 20);
        const ExponentBlock block{v, M};
        const EnergyReport ee = additive_energy_geo(ctx, block, {});
        const PairSumSupportReport yy = additive_rep_set_Y(ctx, block, {});
        CHECK(ee.value == oracle::additive_energy_direct(ctx, block));
        CHECK(ee.value >= u128(M) * M);  // diagonal floor
        CHECK(double(yy.size) * u128_to_double(ee.value) >=
              double(M) * M * M * M - 1e-9);  // Cauchy-Schwarz, exact integers
    }
}

TEST_CASE("diff_counts_I: frozen window, symmetry, totals") {
    // exponents -2..1 give values {4,5,1,3}
    const DiffCounts dc = diff_counts_I(ctx7(), 0, 2);
    CHECK(dc.table.count64(0) == 4);
    for (u64 t = 1; t < 7; ++t) CHECK(dc.table.count64(t) == 2);
    CHECK(dc.energy.value == 40);
    CHECK(dc.energy.diagonal == 16);  // (2M)^2 total pairs... equals sum I

    // negation symmetry and totals on randomized windows
    std::mt19937_64 rng(77);
    for (int i = 0; i < 10; ++i) {
        const PrimeContext ctx(101, 2);
        const u64 M = 1 + rng_below(rng, 10);
        const i64 v = rng_range(rng, -150, 150);
        const DiffCounts d = diff_counts_I(ctx, v, M, {});
        const std::vector<u64> ref = oracle::diff_table_direct(ctx, v, M);
        u64 total = 0;
        for (u64 t = 0; t < 101; ++t) {
            CHECK(d.table.count64(t) == ref[t]);
            CHECK(d.table.count64(t) == d.table.count64((101 - t) % 101));
            total += d.table.count64(t);
        }
        CHECK(total == 4 * M * M);
        CHECK(d.table.count64(0) >= 2 * M);
        CHECK(d.energy.value == oracle::diff_second_moment_direct(ctx, v, M));
    }
}

TEST_CASE("product_set_size: frozen instances") {
    CHECK(product_set_size(ctx7(), Interval{0, 2}, ExponentBlock{0, 2}).size == 4);
    CHECK(product_set_size(ctx7(), Interval{0, 6}, ExponentBlock{0, 6}).size == 6);
    CHECK(product_set_size(ctx7(), Interval{6, 1}, ExponentBlock{0, 1}).size == 1);
    const ProductSetReport r = product_set_size(ctx7(), Interval{0, 6}, ExponentBlock{0, 6});
    CHECK(r.min_terms.size() == 4);
    CHECK(r.lower_min == doctest::Approx(7.0));  // min is p here
}

TEST_CASE("cyclic_convolve_exact: identity, frozen value, mass conservation") {
    RepFunction f(7);
    for (u64 t : {u64(2), u64(3), u64(4), u64(6)}) f.increment(t);

    RepFunction delta(7);
    delta.increment(0);
    const RepFunction id = cyclic_convolve_exact(f, delta);
    for (u64 t = 0; t < 7; ++t) CHECK(id.count(t) == f.count(t));

    const RepFunction sq = cyclic_convolve_exact(f, f);
    CHECK(sq.count64(5) == 3);  // (2,3), (3,2), (6,6)
    CHECK(sq.mass() == BigUint(16));

    // against the schoolbook oracle on random tables
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 5; ++trial) {
        const u64 p = 53;
        RepFunction a(p), b(p);
        for (int i = 0; i < 40; ++i) a.increment(rng_below(rng, p));
        for (int i = 0; i < 25; ++i) b.increment(rng_below(rng, p));
        const RepFunction c = cyclic_convolve_exact(a, b);
        const std::vector<BigUint> ref = oracle::convolve_direct(a, b);
        for (u64 t = 0; t < p; ++t) CHECK(c.count(t) == ref[t]);
        CHECK(c.mass() == a.mass() * b.mass());
    }

    // a declared width too narrow for the mass bound is refused
    RepFunction big(5, 2);
    big.set_entry(1, BigUint(~u64(0)) * BigUint(4));
    CHECK_THROWS_AS(cyclic_convolve_exact(big, big, 1), UnsupportedSizeError);
    CHECK_NOTHROW(cyclic_convolve_exact(big, big, 0));  // auto width
}

TEST_CASE("j_k_counts: frozen J2, mass products, oracle agreement") {
    const std::vector<std::pair<Interval, ExponentBlock>> two(
        2, {Interval{0, 2}, ExponentBlock{0, 2}});
    const RepFunction j2 = j_k_counts(ctx7(), two);
    CHECK(j2.count64(5) == 3);
    CHECK(j2.mass() == BigUint(16));

    const std::vector<u64> ref = oracle::jk_direct(ctx7(), two);
    for (u64 t = 0; t < 7; ++t) CHECK(j2.count64(t) == ref[t]);

    // mixed factors, k=3, p=53
    const PrimeContext ctx(53, find_primitive_root(53));
    const std::vector<std::pair<Interval, ExponentBlock>> three{
        {Interval{2, 5}, ExponentBlock{1, 4}},
        {Interval{-3, 7}, ExponentBlock{0, 3}},
        {Interval{0, 2}, ExponentBlock{-5, 6}},
    };
    const RepFunction j3 = j_k_counts(ctx, three);
    const std::vector<u64> ref3 = oracle::jk_direct(ctx, three);
    BigUint mass(0);
    for (u64 t = 0; t < 53; ++t) {
        CHECK(j3.count64(t) == ref3[t]);
        mass += j3.count(t);
    }
    CHECK(mass == BigUint(u64(5 * 4) * (7 * 3) * (2 * 6)));
    CHECK(j3.mass() == mass);

    CHECK_THROWS_AS(j_k_counts(ctx7(), {}), std::invalid_argument);
    CHECK_THROWS_AS(j_k_counts(ctx7(), {{Interval{0, 1}, ExponentBlock{0, 1}}}),
                    std::invalid_argument);  // k = 1 below range
    const std::vector<std::pair<Interval, ExponentBlock>> seventeen(
        17, {Interval{0, 1}, ExponentBlock{0, 1}});
    CHECK_THROWS_AS(j_k_counts(ctx7(), seventeen), std::invalid_argument);
}

TEST_CASE("coverage: frozen instances and support monotonicity") {
    const CoverageResult c8 = coverage(ctx7(), Interval{0, 2}, ExponentBlock{0, 2}, 8);
    CHECK(c8.covered);
    CHECK(c8.misses.empty());
    CHECK(c8.support_size == 7);

    const CoverageResult c1 = coverage(ctx7(), Interval{0, 6}, ExponentBlock{0, 6}, 1);
    CHECK_FALSE(c1.covered);
    CHECK(c1.misses == std::vector<u64>{0});
    CHECK(c1.support_size == 6);

    // support size never shrinks with k, and folding matches the exact
    // convolution support at oracle scale
    const PrimeContext ctx(101, 2);
    const Interval nset{3, 4};
    const ExponentBlock block{1, 3};
    u64 prev = 0;
    for (unsigned k = 1; k <= 6; ++k) {
        const CoverageResult c = coverage(ctx, nset, block, k);
        CHECK(c.support_size >= prev);
        prev = c.support_size;
        const auto [cov, misses] = oracle::coverage_direct(ctx, nset, block, k);
        CHECK(c.covered == cov);
        CHECK(c.misses == misses);
    }
}

TEST_CASE("glibichuk_check: frozen instances") {
    std::vector<u64> full{1, 2, 3, 4, 5, 6};
    const GlibichukReport r = glibichuk_check(ctx7(), full, full);
    CHECK(r.xy_product == 36);
    CHECK(r.hypothesis);  // 36 > 14
    CHECK(r.covered);
    CHECK(r.product_support == 6);

    // vacuous branch: hypothesis false, conclusion merely reported
    std::vector<u64> tiny{1, 2};
    const GlibichukReport v = glibichuk_check(ctx7(), tiny, tiny);
    CHECK_FALSE(v.hypothesis);

    // singleton on p=3: 8-fold sumset of {1} is {8 mod 3} = {2}
    const PrimeContext ctx3(3, 2);
    const GlibichukReport s = glibichuk_check(ctx3, {1}, {1});
    CHECK_FALSE(s.hypothesis);
    CHECK_FALSE(s.covered);
    CHECK(s.product_support == 1);

    // duplicate and signed-equivalent inputs collapse before counting
    std::vector<u64> dup{1, 8, 2, 9};  // {1,2} mod 7 twice over
    const GlibichukReport d = glibichuk_check(ctx7(), dup, dup);
    CHECK(d.xy_product == 4);
}

TEST_CASE("oracle sweep at small scale: library vs direct enumeration") {
    std::mt19937_64 rng(4096);
    for (u64 p : {u64(7), u64(11), u64(53)}) {
        const PrimeContext ctx(p, find_primitive_root(p));
        for (int trial = 0; trial < 6; ++trial) {
            const u64 N = 1 + rng_below(rng, std::min<u64>(8, p));
            const u64 M = 1 + rng_below(rng, std::min<u64>(8, ctx.order()));
            const i64 u = rng_range(rng, -i64(p), i64(p));
            const i64 v = rng_range(rng, -i64(ctx.order()), i64(ctx.order()));
            const Interval nset{u, N};
            const ExponentBlock block{v, M};

            CHECK(mult_energy(ctx, nset, block).value ==
                  oracle::mult_energy_direct(ctx, nset, block));
            CHECK(product_set_size(ctx, nset, block).size ==
                  oracle::product_set_direct(ctx, nset, block));

            const std::vector<u64> uset = oracle::block_powers(ctx, block);
            CHECK(mult_energy_J0(ctx, N, uset).energy.value ==
                  oracle::j0_direct(ctx, N, uset));
        }
    }
}
