#include "expsumlab/expsum.hpp"

#include "expsumlab/parallel.hpp"

#include <cmath>

namespace esl {

void check_interval(const PrimeContext& ctx, const Interval& nset) {
    if (nset.N > ctx.p())
        throw std::invalid_argument("interval length N exceeds p");
}

void check_block(const PrimeContext& ctx, const ExponentBlock& block) {
    if (!block.extended && block.M > ctx.order())
        throw std::invalid_argument("exponent block length M exceeds the order T");
}

CoefficientVector::CoefficientVector(std::vector<c64> values) : v_(std::move(values)) {
    for (const c64& z : v_) {
        if (std::abs(z) > 1.0 + kModulusSlack)
            throw std::invalid_argument("CoefficientVector: entry modulus exceeds 1");
    }
}

CoefficientVector CoefficientVector::ones(std::size_t n) {
    return CoefficientVector(std::vector<c64>(n, c64(1.0, 0.0)));
}

CoefficientVector CoefficientVector::random_unimodular(std::mt19937_64& rng, std::size_t n) {
    std::vector<c64> v(n);
    for (auto& z : v) {
        const double t = 6.283185307179586 * rng_unit(rng);
        z = c64(std::cos(t), std::sin(t));
    }
    return CoefficientVector(std::move(v));
}

c64 UnitRoots::eval(u64 modulus, u64 k) {
    const double t = 6.283185307179586 * (double(k) / double(modulus));
    return {std::cos(t), std::sin(t)};
}

UnitRoots::UnitRoots(u64 modulus) : m_(modulus) {
    if (modulus == 0) throw std::invalid_argument("UnitRoots: modulus must be positive");
    if (modulus <= kTableCap) {
        table_.resize(modulus);
        for (u64 k = 0; k < modulus; ++k) table_[k] = eval(modulus, k);
    }
}

c64 unit_root(u64 modulus, i64 k) {
    if (modulus == 0) throw std::invalid_argument("unit_root: modulus must be positive");
    return UnitRoots::eval(modulus, reduce_signed(k, modulus));
}

void ChunkedSum::add(c64 term) {
    double y = term.real() - cr_;
    double t = sr_ + y;
    cr_ = (t - sr_) - y;
    sr_ = t;
    y = term.imag() - ci_;
    t = si_ + y;
    ci_ = (t - si_) - y;
    si_ = t;
    if (++in_block_ == kBlock) {
        blocks_.emplace_back(sr_ + cr_, si_ + ci_);
        sr_ = cr_ = si_ = ci_ = 0;
        in_block_ = 0;
    }
}

namespace {

c64 pairwise(std::span<const c64> xs) {
    if (xs.empty()) return {0, 0};
    if (xs.size() == 1) return xs[0];
    const std::size_t mid = xs.size() / 2;
    return pairwise(xs.first(mid)) + pairwise(xs.subspan(mid));
}

}  // namespace

c64 ChunkedSum::value() const {
    const c64 open(sr_ + cr_, si_ + ci_);
    if (blocks_.empty()) return open;
    return pairwise(blocks_) + open;
}

c64 inner_sum(const PrimeContext& ctx, const UnitRoots& roots, u64 a, i64 n,
              const ExponentBlock& block) {
    const u64 p = ctx.p();
    if (a % p == 0) throw std::invalid_argument("inner_sum: a must be nonzero mod p");
    const u64 w = mul_mod(a % p, reduce_signed(n, p), p);
    if (w == 0) return c64(double(block.M), 0.0);  // all terms are 1
    ChunkedSum acc;
    u64 pw = ctx.pow_g(block.first());
    for (u64 i = 0; i < block.M; ++i) {
        acc.add(roots(mul_mod(w, pw, p)));
        pw = mul_mod(pw, ctx.g(), p);
    }
    return acc.value();
}

c64 inner_sum(const PrimeContext& ctx, u64 a, i64 n, const ExponentBlock& block) {
    return inner_sum(ctx, UnitRoots(ctx.p()), a, n, block);
}

double total_sum_S(const PrimeContext& ctx, u64 a, const Interval& nset,
                   const ExponentBlock& block) {
    if (a % ctx.p() == 0) throw std::invalid_argument("total_sum_S: a must be nonzero mod p");
    check_interval(ctx, nset);
    check_block(ctx, block);
    const UnitRoots roots(ctx.p());
    ChunkedSum acc;
    for (u64 i = 0; i < nset.N; ++i) {
        acc.add(c64(std::abs(inner_sum(ctx, roots, a, nset.u + 1 + i64(i), block)), 0.0));
    }
    const double s = acc.value().real();
    const double cap = double(nset.N) * double(block.M);
    if (!(s >= 0.0 && s <= cap * (1.0 + 1e-9)))
        throw std::logic_error("total_sum_S: trivial bound violated");
    return s;
}

c64 weighted_double_sum(const PrimeContext& ctx, u64 a, const Interval& nset,
                        const ExponentBlock& block, const CoefficientVector& alpha,
                        const CoefficientVector& beta) {
    if (a % ctx.p() == 0)
        throw std::invalid_argument("weighted_double_sum: a must be nonzero mod p");
    check_interval(ctx, nset);
    check_block(ctx, block);
    if (alpha.size() != nset.N || beta.size() != block.M)
        throw std::invalid_argument("weighted_double_sum: coefficient lengths must match N and M");
    const u64 p = ctx.p();
    const UnitRoots roots(p);
    ChunkedSum outer;
    for (u64 i = 0; i < nset.N; ++i) {
        const u64 w = mul_mod(a % p, reduce_signed(nset.u + 1 + i64(i), p), p);
        ChunkedSum inner;
        u64 pw = ctx.pow_g(block.first());
        for (u64 j = 0; j < block.M; ++j) {
            inner.add(beta[j] * roots(mul_mod(w, pw, p)));
            pw = mul_mod(pw, ctx.g(), p);
        }
        outer.add(alpha[i] * inner.value());
    }
    const c64 s = outer.value();
    const double cap = double(nset.N) * double(block.M);
    if (!(std::abs(s) <= cap * (1.0 + 1e-9)))
        throw std::logic_error("weighted_double_sum: trivial bound violated");
    return s;
}

double single_sum_max(const PrimeContext& ctx, const ExponentBlock& block, unsigned threads,
                      const Limits& lim) {
    const u64 p = ctx.p();
    if (p > lim.max_scan_modulus)
        throw UnsupportedSizeError("single_sum_max: p exceeds the full-scan cap");
    check_block(ctx, block);
    const UnitRoots roots(p);
    std::vector<u64> powers(block.M);
    u64 pw = ctx.pow_g(block.first());
    for (u64 i = 0; i < block.M; ++i) {
        powers[i] = pw;
        pw = mul_mod(pw, ctx.g(), p);
    }
    constexpr u64 kChunk = 4096;
    std::vector<double> chunk_max(chunk_count(p - 1, kChunk), 0.0);
    for_each_chunk(p - 1, kChunk, threads, [&](std::size_t c, u64 lo, u64 hi) {
        double best = 0.0;
        for (u64 off = lo; off < hi; ++off) {
            const u64 a = off + 1;
            ChunkedSum acc;
            for (u64 t : powers) acc.add(roots(mul_mod(a, t, p)));
            best = std::max(best, std::abs(acc.value()));
        }
        chunk_max[c] = best;
    });
    double best = 0.0;
    for (double v : chunk_max) best = std::max(best, v);
    return best;
}

double parseval_mean_square(const PrimeContext& ctx, const Interval& nset,
                            const ExponentBlock& block, unsigned threads, const Limits& lim) {
    const u64 p = ctx.p();
    if (p > lim.max_scan_modulus)
        throw UnsupportedSizeError("parseval_mean_square: p exceeds the full-scan cap");
    check_interval(ctx, nset);
    check_block(ctx, block);
    if (nset.N * block.M * 8 > lim.max_mem_bytes)
        throw UnsupportedSizeError("parseval_mean_square: N*M term list exceeds the memory budget");
    const UnitRoots roots(p);
    // flat list of x*g^y, one entry per (x, y) pair, repeats kept
    std::vector<u64> terms;
    terms.reserve(std::size_t(nset.N * block.M));
    u64 pw = ctx.pow_g(block.first());
    for (u64 j = 0; j < block.M; ++j) {
        for (u64 i = 0; i < nset.N; ++i) {
            terms.push_back(mul_mod(reduce_signed(nset.u + 1 + i64(i), p), pw, p));
        }
        pw = mul_mod(pw, ctx.g(), p);
    }
    constexpr u64 kChunk = 1024;
    std::vector<c64> partial(chunk_count(p, kChunk), c64(0, 0));
    for_each_chunk(p, kChunk, threads, [&](std::size_t c, u64 lo, u64 hi) {
        ChunkedSum part;
        for (u64 a = lo; a < hi; ++a) {
            ChunkedSum acc;
            for (u64 t : terms) acc.add(roots(mul_mod(a, t, p)));
            part.add(c64(std::norm(acc.value()), 0.0));
        }
        partial[c] = part.value();
    });
    return pairwise(partial).real() / double(p);
}

}  // namespace esl
