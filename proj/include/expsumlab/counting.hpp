#pragma once

// Exact integer counting of congruence-solution quantities: representation
// functions, multiplicative/additive energies, difference counts I_lambda,
// product-set sizes, k-fold convolution counts J_k, and sumset coverage.
//
// Everything in this header is exact: counts are integers, convolutions are
// carried out over NTT primes and recombined by CRT, and no floating-point
// value ever feeds back into a count.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expsumlab/bigint.hpp"
#include "expsumlab/common.hpp"
#include "expsumlab/expsum.hpp"
#include "expsumlab/modmath.hpp"

namespace esl {

// Dense length-p table of exact nonnegative counts, the universal counting
// object. Entries are `width` 64-bit limbs each (little-endian); width 1 is
// the common case and is promoted only when a declared mass bound requires
// more. The table never stores approximate values.
class RepFunction {
  public:
    RepFunction(u64 p, std::size_t width = 1, const Limits& lim = Limits{});

    u64 p() const { return p_; }
    std::size_t width() const { return width_; }

    // Adds 1 to counts[t]. Carries across limbs; overflow past the declared
    // width is an internal error (the builder must size the width from an
    // a-priori mass bound).
    void increment(u64 t);

    // counts[t] as u64; throws std::overflow_error if it does not fit.
    u64 count64(u64 t) const;
    BigUint count(u64 t) const;
    std::span<const u64> entry(u64 t) const;
    // Overwrites counts[t]; throws UnsupportedSizeError if v needs > width limbs.
    void set_entry(u64 t, const BigUint& v);

    // Total mass = sum of all counts, recomputed exactly on each call.
    BigUint mass() const;
    std::vector<u64> support() const;
    u64 support_size() const;
    // Sum of squared counts; requires width 1 (counts that fit u64).
    u128 sum_squares() const;

  private:
    u64 p_;
    std::size_t width_;
    std::vector<u64> data_;  // p_ * width_ limbs
};

// An exact count paired with the evaluated bound it is monitored against.
struct EnergyReport {
    u128 value = 0;     // exact solution count
    u128 diagonal = 0;  // exact diagonal lower bound
    std::vector<std::pair<std::string, double>> bound_terms;
    double bound_total = 0.0;  // sum of the terms, fixed left-to-right order
    double ratio = 0.0;        // value / bound_total
};

struct J0Report {
    EnergyReport energy;
    u64 uu_size = 0;       // |U*U|, measured
    bool uu_small = false;  // |U*U| < 10|U| (reported, not enforced)
};

struct ProductSetReport {
    u64 size = 0;                // #{x*g^y mod p}
    double lower_min = 0.0;      // min{N^2, NM, p, p^{1/4}M^{1/4}N}
    std::vector<std::pair<std::string, double>> min_terms;
};

struct PairSumSupportReport {
    u64 size = 0;            // |{g^{y1}+g^{y2} mod p}|
    double cs_lower = 0.0;   // M^4 / E_+ (Cauchy-Schwarz floor)
    double scale = 0.0;      // M^{3/2}
};

struct DiffCounts {
    RepFunction table;    // I_lambda for all lambda
    EnergyReport energy;  // value = sum I_lambda^2, monitored against (2M)^{5/2}
};

struct CoverageResult {
    bool covered = false;
    std::vector<u64> misses;  // residues with no representation
    u64 support_size = 0;     // support of the k-fold sumset
};

struct GlibichukReport {
    u128 xy_product = 0;        // |X|*|Y|
    bool hypothesis = false;    // |X|*|Y| > 2p
    u64 product_support = 0;    // |X*Y|
    bool covered = false;       // 8-fold sumset of X*Y == Z_p
};

// counts[t] = #{(x,y) in N x M : x*g^y = t mod p}; mass = N*M.
RepFunction rep_function_product(const PrimeContext& ctx, const Interval& nset,
                                 const ExponentBlock& block, const Limits& lim = Limits{});

// J = #{x*g^y = x1*g^{y1}} = sum of squared counts, with the
// M^2 + MN + M^2N^2/p + M^{7/4}N/p^{1/4} bound evaluated alongside.
EnergyReport mult_energy(const PrimeContext& ctx, const Interval& nset,
                         const ExponentBlock& block, const Limits& lim = Limits{});

// J0 = #{x*r = x1*r1 : 1 <= x,x1 <= H, r,r1 in U} with the
// |U|H + |U|^2H^2/p + |U|^{7/4}H/p^{1/4} bound; |U*U| < 10|U| is measured only.
J0Report mult_energy_J0(const PrimeContext& ctx, u64 H, std::vector<u64> uset,
                        const Limits& lim = Limits{});

// counts[s] = #{(m1,m2) in M^2 : g^{m1}+g^{m2} = s mod p}.
RepFunction pair_sum_rep(const PrimeContext& ctx, const ExponentBlock& block,
                         const Limits& lim = Limits{});

// E_+ = sum of squared pair-sum counts, monitored against M^{5/2}.
EnergyReport additive_energy_geo(const PrimeContext& ctx, const ExponentBlock& block,
                                 const Limits& lim = Limits{});

// Cardinality of {g^{y1}+g^{y2} mod p}, with the M^4/E_+ floor and the M^{3/2}
// scale it is monitored against.
PairSumSupportReport additive_rep_set_Y(const PrimeContext& ctx, const ExponentBlock& block,
                                        const Limits& lim = Limits{});

// I_lambda = #{g^{m1} - g^{m2} = lambda : v-M <= m1,m2 <= v+M-1} over the
// extended exponent window of length 2M (may exceed T and wrap), plus the
// exact second moment sum I_lambda^2 monitored against (2M)^{5/2}.
DiffCounts diff_counts_I(const PrimeContext& ctx, i64 v, u64 M, const Limits& lim = Limits{});

// Number of distinct residues x*g^y, with min{N^2, NM, p, p^{1/4}M^{1/4}N}.
ProductSetReport product_set_size(const PrimeContext& ctx, const Interval& nset,
                                  const ExponentBlock& block, const Limits& lim = Limits{});

// out[lambda] = sum_t f[t]*h[(lambda-t) mod p], exactly. `declared_width` of 0
// sizes the output from the mass product; a nonzero value is honored only if
// it is at least that wide (otherwise unsupported-size: the caller must widen).
RepFunction cyclic_convolve_exact(const RepFunction& f, const RepFunction& h,
                                  std::size_t declared_width = 0);

// J_k(lambda) for all lambda: the k-fold cyclic convolution of the per-factor
// product rep functions, widths widened automatically. 2 <= k <= 16.
RepFunction j_k_counts(const PrimeContext& ctx,
                       const std::vector<std::pair<Interval, ExponentBlock>>& factors,
                       const Limits& lim = Limits{});

// Support of the k-fold sumset of {x*g^y} via boolean folding, 1 <= k <= 16.
CoverageResult coverage(const PrimeContext& ctx, const Interval& nset,
                        const ExponentBlock& block, unsigned k, const Limits& lim = Limits{});

// |X||Y| > 2p implies 8-fold sumset of X*Y covers Z_p; the implication is a
// theorem, so an instance where it fails throws std::logic_error.
GlibichukReport glibichuk_check(const PrimeContext& ctx, const std::vector<u64>& xset,
                                const std::vector<u64>& yset, const Limits& lim = Limits{});

}  // namespace esl
