#include "expsumlab/counting.hpp"

#include "expsumlab/ntt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace esl {

namespace {

// ascending powers g^m over the block, one mulmod per step
std::vector<u64> power_list(const PrimeContext& ctx, const ExponentBlock& block) {
    std::vector<u64> v(block.M);
    u64 pw = ctx.pow_g(block.first());
    for (u64 i = 0; i < block.M; ++i) {
        v[i] = pw;
        pw = mul_mod(pw, ctx.g(), ctx.p());
    }
    return v;
}

std::vector<u64> interval_residues(const PrimeContext& ctx, const Interval& nset) {
    std::vector<u64> v(nset.N);
    for (u64 i = 0; i < nset.N; ++i) v[i] = reduce_signed(nset.u + 1 + i64(i), ctx.p());
    return v;
}

EnergyReport make_report(u128 value, u128 diagonal,
                         std::vector<std::pair<std::string, double>> terms) {
    EnergyReport r;
    r.value = value;
    r.diagonal = diagonal;
    r.bound_terms = std::move(terms);
    double total = 0.0;
    for (const auto& [name, t] : r.bound_terms) {
        if (!(t >= 0.0)) throw std::logic_error("bound term " + name + " is negative");
        total += t;
    }
    r.bound_total = total;
    r.ratio = total > 0.0 ? u128_to_double(value) / total : 0.0;
    if (r.value < r.diagonal) throw std::logic_error("energy fell below its diagonal");
    return r;
}

}  // namespace

RepFunction::RepFunction(u64 p, std::size_t width, const Limits& lim) : p_(p), width_(width) {
    if (p == 0) throw std::invalid_argument("RepFunction: modulus must be positive");
    if (width == 0) throw std::invalid_argument("RepFunction: width must be positive");
    if (p > lim.max_table_modulus)
        throw UnsupportedSizeError("RepFunction: modulus exceeds the dense-table cap");
    if (u128(p) * width * 8 > lim.max_mem_bytes)
        throw UnsupportedSizeError("RepFunction: table exceeds the memory budget");
    data_.assign(std::size_t(p) * width, 0);
}

void RepFunction::increment(u64 t) {
    u64* e = &data_[std::size_t(t) * width_];
    for (std::size_t i = 0; i < width_; ++i) {
        if (++e[i] != 0) return;
    }
    throw std::logic_error("RepFunction: count overflowed its declared width");
}

u64 RepFunction::count64(u64 t) const {
    const u64* e = &data_[std::size_t(t) * width_];
    for (std::size_t i = 1; i < width_; ++i)
        if (e[i] != 0) throw std::overflow_error("RepFunction: count does not fit in 64 bits");
    return e[0];
}

BigUint RepFunction::count(u64 t) const { return BigUint::from_limbs(entry(t)); }

std::span<const u64> RepFunction::entry(u64 t) const {
    return {&data_[std::size_t(t) * width_], width_};
}

void RepFunction::set_entry(u64 t, const BigUint& v) {
    if (v.limb_count() > width_)
        throw UnsupportedSizeError("RepFunction: entry is wider than the declared width");
    u64* e = &data_[std::size_t(t) * width_];
    for (std::size_t i = 0; i < width_; ++i) e[i] = i < v.limb_count() ? v.limbs()[i] : 0;
}

BigUint RepFunction::mass() const {
    if (width_ == 1) {
        u128 acc = 0;
        for (u64 t = 0; t < p_; ++t) acc += data_[t];  // p*2^64 < 2^128, cannot overflow
        return BigUint::from_u128(acc);
    }
    BigUint acc;
    for (u64 t = 0; t < p_; ++t) acc += count(t);
    return acc;
}

std::vector<u64> RepFunction::support() const {
    std::vector<u64> s;
    for (u64 t = 0; t < p_; ++t) {
        const u64* e = &data_[std::size_t(t) * width_];
        for (std::size_t i = 0; i < width_; ++i) {
            if (e[i] != 0) {
                s.push_back(t);
                break;
            }
        }
    }
    return s;
}

u64 RepFunction::support_size() const {
    u64 n = 0;
    for (u64 t = 0; t < p_; ++t) {
        const u64* e = &data_[std::size_t(t) * width_];
        for (std::size_t i = 0; i < width_; ++i) {
            if (e[i] != 0) {
                ++n;
                break;
            }
        }
    }
    return n;
}

u128 RepFunction::sum_squares() const {
    if (width_ != 1) throw std::logic_error("RepFunction: sum_squares requires width-1 counts");
    u128 total = 0;
    for (u64 t = 0; t < p_; ++t) total += data_[t];
    if (u64(total >> 64) != 0)
        throw std::overflow_error("RepFunction: mass too large for an exact u128 second moment");
    u128 acc = 0;
    for (u64 t = 0; t < p_; ++t) acc += u128(data_[t]) * data_[t];  // <= mass^2 < 2^128
    return acc;
}

RepFunction rep_function_product(const PrimeContext& ctx, const Interval& nset,
                                 const ExponentBlock& block, const Limits& lim) {
    check_interval(ctx, nset);
    check_block(ctx, block);
    const u64 p = ctx.p();
    RepFunction rf(p, 1, lim);
    const std::vector<u64> xs = interval_residues(ctx, nset);
    const std::vector<u64> pws = power_list(ctx, block);
    for (u64 pw : pws)
        for (u64 x : xs) rf.increment(mul_mod(x, pw, p));
    return rf;
}

EnergyReport mult_energy(const PrimeContext& ctx, const Interval& nset,
                         const ExponentBlock& block, const Limits& lim) {
    const RepFunction rf = rep_function_product(ctx, nset, block, lim);
    const double N = double(nset.N), M = double(block.M), p = double(ctx.p());
    return make_report(rf.sum_squares(), u128(nset.N) * block.M,
                       {{"M^2", M * M},
                        {"M*N", M * N},
                        {"M^2*N^2/p", M * M * N * N / p},
                        {"M^{7/4}*N/p^{1/4}", std::pow(M, 1.75) * N / std::pow(p, 0.25)}});
}

J0Report mult_energy_J0(const PrimeContext& ctx, u64 H, std::vector<u64> uset,
                        const Limits& lim) {
    if (H == 0) throw std::invalid_argument("mult_energy_J0: H must be positive");
    if (uset.empty()) throw std::invalid_argument("mult_energy_J0: U must be nonempty");
    const u64 p = ctx.p();
    for (u64& r : uset) {
        r %= p;
        if (r == 0) throw std::invalid_argument("mult_energy_J0: U must not contain 0");
    }
    std::sort(uset.begin(), uset.end());
    uset.erase(std::unique(uset.begin(), uset.end()), uset.end());

    RepFunction rf(p, 1, lim);
    for (u64 x = 1; x <= H; ++x) {
        const u64 xr = x % p;
        for (u64 r : uset) rf.increment(mul_mod(xr, r, p));
    }
    const double U = double(uset.size()), Hd = double(H), pd = double(p);
    J0Report rep;
    rep.energy = make_report(rf.sum_squares(), u128(uset.size()) * H,
                             {{"|U|*H", U * Hd},
                              {"|U|^2*H^2/p", U * U * Hd * Hd / pd},
                              {"|U|^{7/4}*H/p^{1/4}", std::pow(U, 1.75) * Hd / std::pow(pd, 0.25)}});

    std::vector<u8> seen(p, 0);
    u64 distinct = 0;
    for (u64 a : uset)
        for (u64 b : uset) {
            const u64 t = mul_mod(a, b, p);
            if (!seen[t]) {
                seen[t] = 1;
                ++distinct;
            }
        }
    rep.uu_size = distinct;
    rep.uu_small = distinct < 10 * uset.size();
    return rep;
}

RepFunction pair_sum_rep(const PrimeContext& ctx, const ExponentBlock& block, const Limits& lim) {
    check_block(ctx, block);
    const u64 p = ctx.p();
    const std::vector<u64> pws = power_list(ctx, block);
    RepFunction rf(p, 1, lim);
    for (u64 a : pws)
        for (u64 b : pws) rf.increment(add_mod(a, b, p));
    return rf;
}

EnergyReport additive_energy_geo(const PrimeContext& ctx, const ExponentBlock& block,
                                 const Limits& lim) {
    const RepFunction rf = pair_sum_rep(ctx, block, lim);
    const double M = double(block.M);
    return make_report(rf.sum_squares(), u128(block.M) * block.M,
                       {{"M^{5/2}", std::pow(M, 2.5)}});
}

PairSumSupportReport additive_rep_set_Y(const PrimeContext& ctx, const ExponentBlock& block,
                                        const Limits& lim) {
    const RepFunction rf = pair_sum_rep(ctx, block, lim);
    const double M = double(block.M);
    PairSumSupportReport rep;
    rep.size = rf.support_size();
    rep.cs_lower = M * M * M * M / u128_to_double(rf.sum_squares());
    rep.scale = std::pow(M, 1.5);
    return rep;
}

DiffCounts diff_counts_I(const PrimeContext& ctx, i64 v, u64 M, const Limits& lim) {
    if (M == 0) throw std::invalid_argument("diff_counts_I: M must be positive");
    if (M > u64(std::numeric_limits<i64>::max() / 4))
        throw UnsupportedSizeError("diff_counts_I: window length overflows the exponent range");
    const u64 p = ctx.p();
    // the window v-M <= m <= v+M-1 of length 2M; deliberately may exceed T
    const ExponentBlock window{v - i64(M) - 1, 2 * M, true};
    const std::vector<u64> pws = power_list(ctx, window);
    RepFunction rf(p, 1, lim);
    for (u64 a : pws)
        for (u64 b : pws) rf.increment(sub_mod(a, b, p));
    const double L = double(2 * M);
    DiffCounts dc{std::move(rf), EnergyReport{}};
    dc.energy = make_report(dc.table.sum_squares(), u128(2 * M) * (2 * M),
                            {{"(2M)^{5/2}", std::pow(L, 2.5)}});
    return dc;
}

ProductSetReport product_set_size(const PrimeContext& ctx, const Interval& nset,
                                  const ExponentBlock& block, const Limits& lim) {
    const RepFunction rf = rep_function_product(ctx, nset, block, lim);
    const double N = double(nset.N), M = double(block.M), p = double(ctx.p());
    ProductSetReport rep;
    rep.size = rf.support_size();
    rep.min_terms = {{"N^2", N * N},
                     {"N*M", N * M},
                     {"p", p},
                     {"p^{1/4}M^{1/4}N", std::pow(p, 0.25) * std::pow(M, 0.25) * N}};
    rep.lower_min = rep.min_terms[0].second;
    for (const auto& [name, t] : rep.min_terms) rep.lower_min = std::min(rep.lower_min, t);
    return rep;
}

namespace {

// residues of every entry of rf modulo q, zero-padded to length len
std::vector<u64> entries_mod(const RepFunction& rf, u64 q, std::size_t len) {
    std::vector<u64> r(len, 0);
    for (u64 t = 0; t < rf.p(); ++t) r[t] = BigUint::span_mod_u64(rf.entry(t), q);
    return r;
}

std::size_t conv_length(u64 p) {
    std::size_t L = 1;
    while (L < 2 * p - 1) L <<= 1;
    return L;
}

}  // namespace

RepFunction cyclic_convolve_exact(const RepFunction& f, const RepFunction& h,
                                  std::size_t declared_width) {
    if (f.p() != h.p()) throw std::invalid_argument("cyclic_convolve_exact: modulus mismatch");
    const u64 p = f.p();
    const BigUint mass_f = f.mass(), mass_h = h.mass();
    const BigUint entry_bound = mass_f * mass_h;  // out[t] <= total mass
    const std::size_t needed =
        std::max<std::size_t>(1, std::size_t((entry_bound.bit_length() + 63) / 64));
    if (declared_width != 0 && declared_width < needed)
        throw UnsupportedSizeError(
            "cyclic_convolve_exact: declared width cannot hold the mass product; widen it");
    const std::size_t width = declared_width != 0 ? declared_width : needed;

    const std::size_t nprimes = ntt::primes_needed(entry_bound * BigUint(p));
    const std::size_t L = conv_length(p);

    // per-prime folded residue vectors
    std::vector<std::vector<u64>> res(nprimes);
    for (std::size_t i = 0; i < nprimes; ++i) {
        const ntt::Prime& P = ntt::prime(i);
        std::vector<u64> c =
            ntt::convolve_cyclic(entries_mod(f, P.q, L), entries_mod(h, P.q, L), P);
        std::vector<u64> folded(p, 0);
        for (std::size_t idx = 0; idx + 1 < 2 * std::size_t(p); ++idx)
            folded[idx % p] = add_mod(folded[idx % p], c[idx], P.q);
        res[i] = std::move(folded);
    }

    // Garner: mixed-radix digits from the per-prime residues.
    // pre[i][j] = q_0*...*q_{j-1} mod q_i, inv[i] = (pre[i][i])^{-1} mod q_i
    std::vector<std::vector<u64>> pre(nprimes);
    std::vector<u64> inv(nprimes, 1);
    for (std::size_t i = 0; i < nprimes; ++i) {
        const u64 qi = ntt::prime(i).q;
        pre[i].assign(i + 1, 1);
        for (std::size_t j = 1; j <= i; ++j)
            pre[i][j] = mul_mod(pre[i][j - 1], ntt::prime(j - 1).q % qi, qi);
        if (i > 0) inv[i] = mod_inverse(pre[i][i], qi);
    }

    RepFunction out(p, width);
    std::vector<u64> digits(nprimes);
    for (u64 t = 0; t < p; ++t) {
        digits[0] = res[0][t];
        for (std::size_t i = 1; i < nprimes; ++i) {
            const u64 qi = ntt::prime(i).q;
            u64 partial = 0;  // value of the digits so far, mod q_i
            for (std::size_t j = 0; j < i; ++j)
                partial = add_mod(partial, mul_mod(digits[j] % qi, pre[i][j], qi), qi);
            digits[i] = mul_mod(sub_mod(res[i][t] % qi, partial, qi), inv[i], qi);
        }
        BigUint value(digits[nprimes - 1]);
        for (std::size_t j = nprimes - 1; j-- > 0;)
            value = value * BigUint(ntt::prime(j).q) + BigUint(digits[j]);
        out.set_entry(t, value);
    }

    if (out.mass() != entry_bound)
        throw std::logic_error("cyclic_convolve_exact: mass failed to multiply exactly");
    return out;
}

RepFunction j_k_counts(const PrimeContext& ctx,
                       const std::vector<std::pair<Interval, ExponentBlock>>& factors,
                       const Limits& lim) {
    if (factors.size() < 2 || factors.size() > 16)
        throw std::invalid_argument("j_k_counts: k must be between 2 and 16");
    RepFunction acc = rep_function_product(ctx, factors[0].first, factors[0].second, lim);
    for (std::size_t i = 1; i < factors.size(); ++i) {
        const RepFunction next = rep_function_product(ctx, factors[i].first, factors[i].second, lim);
        acc = cyclic_convolve_exact(acc, next);  // auto width; mass checked inside
    }
    return acc;
}

namespace {

// 0/1 support of the sum (convolution) of two 0/1 supports, one NTT prime;
// entries never exceed p, far below the prime, so the counts are exact.
std::vector<u64> fold_support(u64 p, const std::vector<u64>& a, const std::vector<u64>& b) {
    const ntt::Prime& P = ntt::prime(0);
    const std::size_t L = conv_length(p);
    std::vector<u64> fa(L, 0), fb(L, 0);
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    std::vector<u64> c = ntt::convolve_cyclic(std::move(fa), std::move(fb), P);
    std::vector<u64> out(p, 0);
    for (std::size_t idx = 0; idx + 1 < 2 * std::size_t(p); ++idx)
        if (c[idx] != 0) out[idx % p] = 1;
    return out;
}

// support of the k-fold sumset of a 0/1 base vector, by binary expansion
std::vector<u64> kfold_support(u64 p, std::vector<u64> base, unsigned k) {
    std::vector<u64> result;
    while (k != 0) {
        if (k & 1u) result = result.empty() ? base : fold_support(p, result, base);
        k >>= 1u;
        if (k != 0) base = fold_support(p, base, base);
    }
    return result;
}

}  // namespace

CoverageResult coverage(const PrimeContext& ctx, const Interval& nset, const ExponentBlock& block,
                        unsigned k, const Limits& lim) {
    if (k < 1 || k > 16) throw std::invalid_argument("coverage: k must be between 1 and 16");
    const u64 p = ctx.p();
    const RepFunction rf = rep_function_product(ctx, nset, block, lim);
    std::vector<u64> base(p, 0);
    for (u64 t = 0; t < p; ++t) base[t] = rf.count64(t) != 0 ? 1 : 0;
    const std::vector<u64> sup = kfold_support(p, std::move(base), k);
    CoverageResult res;
    for (u64 t = 0; t < p; ++t)
        if (sup[t] == 0) res.misses.push_back(t);
    res.support_size = p - res.misses.size();
    res.covered = res.misses.empty();
    return res;
}

GlibichukReport glibichuk_check(const PrimeContext& ctx, const std::vector<u64>& xset,
                                const std::vector<u64>& yset, const Limits& lim) {
    if (xset.empty() || yset.empty())
        throw std::invalid_argument("glibichuk_check: X and Y must be nonempty");
    const u64 p = ctx.p();
    if (p > lim.max_table_modulus)
        throw UnsupportedSizeError("glibichuk_check: modulus exceeds the dense-table cap");
    auto dedupe = [p](std::vector<u64> v) {
        for (u64& r : v) r %= p;
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    const std::vector<u64> xs = dedupe(xset), ys = dedupe(yset);

    GlibichukReport rep;
    rep.xy_product = u128(xs.size()) * ys.size();
    rep.hypothesis = rep.xy_product > u128(2) * p;

    std::vector<u64> prod(p, 0);
    for (u64 x : xs)
        for (u64 y : ys) prod[mul_mod(x, y, p)] = 1;
    for (u64 t = 0; t < p; ++t) rep.product_support += prod[t];

    const std::vector<u64> sup = kfold_support(p, std::move(prod), 8);
    rep.covered = true;
    for (u64 t = 0; t < p; ++t)
        if (sup[t] == 0) {
            rep.covered = false;
            break;
        }
    if (rep.hypothesis && !rep.covered)
        throw std::logic_error(
            "glibichuk_check: |X||Y| > 2p yet the 8-fold sumset misses a residue; "
            "this contradicts the theorem and indicates a counting bug");
    return rep;
}

}  // namespace esl
