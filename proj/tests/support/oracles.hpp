#pragma once

// Direct-enumeration oracles for the counting operations. Deliberately
// written against the naive definitions — a fresh modular power for every
// value, flat histograms, quadruple solution-counting loops, and O(p^2)
// schoolbook convolution — sharing none of the library's incremental
// structures, so agreement is meaningful evidence.

#include <utility>
#include <vector>

#include "expsumlab/counting.hpp"
#include "expsumlab/expsum.hpp"
#include "expsumlab/modmath.hpp"

namespace esl::oracle {

// every x*g^y mod p, one fresh pow per (x, y) pair
std::vector<u64> product_values(const PrimeContext& ctx, const Interval& nset,
                                const ExponentBlock& block);

// g^m for every m in the block, one fresh pow each
std::vector<u64> block_powers(const PrimeContext& ctx, const ExponentBlock& block);

// #{x*g^y = x1*g^{y1}} by the quadruple loop
u128 mult_energy_direct(const PrimeContext& ctx, const Interval& nset,
                        const ExponentBlock& block);

// #{x*r = x1*r1 : 1 <= x,x1 <= H, r,r1 in U} by the quadruple loop
u128 j0_direct(const PrimeContext& ctx, u64 H, std::vector<u64> uset);

// #{g^{m1}+g^{m2} = g^{m3}+g^{m4}} by the quadruple loop
u128 additive_energy_direct(const PrimeContext& ctx, const ExponentBlock& block);

// I_lambda histogram over the window v-M <= m <= v+M-1, fresh pows
std::vector<u64> diff_table_direct(const PrimeContext& ctx, i64 v, u64 M);

// sum of I_lambda^2 as a solution count of the quadruple congruence
u128 diff_second_moment_direct(const PrimeContext& ctx, i64 v, u64 M);

u64 product_set_direct(const PrimeContext& ctx, const Interval& nset, const ExponentBlock& block);

// k-fold J_k table by chained O(p^2) schoolbook cyclic convolution
std::vector<u64> jk_direct(const PrimeContext& ctx,
                           const std::vector<std::pair<Interval, ExponentBlock>>& factors);

// schoolbook O(p^2) cyclic convolution of exact count tables
std::vector<BigUint> convolve_direct(const RepFunction& f, const RepFunction& h);

// k-fold sumset support by sequential O(p^2) boolean folds
std::vector<u64> kfold_support_direct(u64 p, const std::vector<u64>& base01, unsigned k);

// covered flag + sorted miss list
std::pair<bool, std::vector<u64>> coverage_direct(const PrimeContext& ctx, const Interval& nset,
                                                  const ExponentBlock& block, unsigned k);

// 8-fold sumset of X*Y equals Z_p, all by direct loops
bool glibichuk_covered_direct(const PrimeContext& ctx, const std::vector<u64>& xset,
                              const std::vector<u64>& yset);

}  // namespace esl::oracle
