#pragma once

// Floating-point evaluation of the single and double exponential sums
// sum e_p(a n g^m) over an interval of n and a block of exponents m, with
// deterministic compensated accumulation (Kahan inside fixed 4096-term
// blocks, pairwise combination of block subtotals).

#include "expsumlab/common.hpp"
#include "expsumlab/modmath.hpp"

#include <complex>
#include <span>
#include <vector>

namespace esl {

using c64 = std::complex<double>;

// the set {u+1, ..., u+N}
struct Interval {
    i64 u = 0;
    u64 N = 1;
    Interval(i64 u_, u64 N_) : u(u_), N(N_) {
        if (N == 0) throw std::invalid_argument("Interval: length must be positive");
    }
    i64 first() const { return u + 1; }
    i64 last() const { return u + i64(N); }
};

// the exponent set {v+1, ..., v+M}. Extended blocks (length 2M windows used
// by the difference counts) may exceed the order T and skip the M <= T gate.
struct ExponentBlock {
    i64 v = 0;
    u64 M = 1;
    bool extended = false;
    ExponentBlock(i64 v_, u64 M_, bool extended_ = false) : v(v_), M(M_), extended(extended_) {
        if (M == 0) throw std::invalid_argument("ExponentBlock: length must be positive");
    }
    i64 first() const { return v + 1; }
};

// gate helpers shared by expsum and counting
void check_interval(const PrimeContext& ctx, const Interval& nset);  // N <= p
void check_block(const PrimeContext& ctx, const ExponentBlock& block);  // M <= T unless extended

// complex coefficients of modulus <= 1 (validated at construction)
class CoefficientVector {
public:
    explicit CoefficientVector(std::vector<c64> values);
    static CoefficientVector ones(std::size_t n);
    static CoefficientVector random_unimodular(std::mt19937_64& rng, std::size_t n);

    std::size_t size() const { return v_.size(); }
    const c64& operator[](std::size_t i) const { return v_[i]; }
    std::span<const c64> values() const { return v_; }

    static constexpr double kModulusSlack = 1e-12;

private:
    std::vector<c64> v_;
};

// e^{2 pi i k / modulus}; k is reduced mod `modulus` before evaluation.
// Defined for any positive modulus, prime or not.
c64 unit_root(u64 modulus, i64 k);

// Root-of-unity provider: a dense table when the modulus is small enough,
// per-call evaluation otherwise. Both paths use the identical expression,
// so results do not depend on which one was taken.
class UnitRoots {
public:
    static constexpr u64 kTableCap = u64(1) << 22;
    explicit UnitRoots(u64 modulus);
    u64 modulus() const { return m_; }
    c64 operator()(u64 k) const {  // k in [0, modulus)
        return table_.empty() ? eval(m_, k) : table_[k];
    }
    static c64 eval(u64 modulus, u64 k);

private:
    u64 m_;
    std::vector<c64> table_;
};

// Deterministic compensated accumulator. add() order fully determines the
// result; no reassociation happens behind the caller's back.
class ChunkedSum {
public:
    static constexpr std::size_t kBlock = 4096;
    void add(c64 term);
    c64 value() const;  // pairwise over finished blocks plus the open one

private:
    double sr_ = 0, cr_ = 0, si_ = 0, ci_ = 0;  // Kahan state of the open block
    std::size_t in_block_ = 0;
    std::vector<c64> blocks_;
};

// sum over m in block of e_p(a n g^m); successive powers of g (or of the
// inverse for descending/negative ranges), never a per-term inverse
c64 inner_sum(const PrimeContext& ctx, const UnitRoots& roots, u64 a, i64 n,
              const ExponentBlock& block);
c64 inner_sum(const PrimeContext& ctx, u64 a, i64 n, const ExponentBlock& block);

// S_{a,p,g}(N, M) = sum over n of |inner_sum(n)|; 0 <= result <= N*M
double total_sum_S(const PrimeContext& ctx, u64 a, const Interval& nset,
                   const ExponentBlock& block);

// sum over n, m of alpha_n beta_m e_p(a n g^m); |result| <= N*M
c64 weighted_double_sum(const PrimeContext& ctx, u64 a, const Interval& nset,
                        const ExponentBlock& block, const CoefficientVector& alpha,
                        const CoefficientVector& beta);

// max over a in [1, p-1] of |sum over m of e_p(a g^m)|, scanning every a
double single_sum_max(const PrimeContext& ctx, const ExponentBlock& block,
                      unsigned threads = 1, const Limits& lim = {});

// (1/p) * sum over a of |sum over x in N, y in M of e_p(a x g^y)|^2,
// evaluated term by term (no counting shortcut); equals the exact
// multiplicative energy by orthogonality
double parseval_mean_square(const PrimeContext& ctx, const Interval& nset,
                            const ExponentBlock& block, unsigned threads = 1,
                            const Limits& lim = {});

}  // namespace esl
