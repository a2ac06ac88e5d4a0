#pragma once

// Evaluation of the stated bound formulas, paired with exactly computed
// quantities, plus the per-instance experiment runners behind seeded sweeps.
// Bounds hide absolute constants, so everything here is reported as a
// monitored ratio; nothing in this module asserts an inequality except the
// hypothesis gates that define where a formula applies at all.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "expsumlab/common.hpp"
#include "expsumlab/counting.hpp"
#include "expsumlab/expsum.hpp"
#include "expsumlab/modmath.hpp"

namespace esl {

struct BoundReport {
    std::vector<std::pair<std::string, double>> bound_terms;
    double bound_total = 0.0;   // sum of the terms, fixed left-to-right order
    double observed = 0.0;      // exact quantity being monitored (0 if none)
    double ratio = 0.0;         // observed / bound_total
    double trivial_bound = 0.0; // combinatorial ceiling (0 if none applies)
    bool nontrivial = false;    // bound_total < trivial_bound
};

// One row of a verification sweep; carries everything needed to rerun it.
struct SweepRecord {
    u64 p = 0;
    u64 g = 0;
    u64 T = 0;
    u64 a = 0;
    i64 u = 0;
    i64 v = 0;
    u64 N = 0;
    u64 M = 0;
    unsigned k = 0;
    u64 seed = 0;
    double observed = 0.0;
    double bound_total = 0.0;
    double ratio = 0.0;
    bool nontrivial = false;
    double wall_ms = 0.0;
    bool flagged = false;  // a hypothesis gate rejected this row
    std::string note;      // gate message for flagged rows
    // named detail values (bound terms, hypothesis margins, set sizes)
    std::vector<std::pair<std::string, double>> extras;
};

struct LemmaBounds {
    BoundReport lemma1;      // |U|H + |U|^2H^2/p + |U|^{7/4}H/p^{1/4}
    BoundReport lemma2;      // M^2 + MN + M^2N^2/p + M^{7/4}N/p^{1/4}
    BoundReport corollary1;  // min{N^2, NM, p, p^{1/4}M^{1/4}N}
};

// The four-term bound on Delta = S/(NM). Requires M < p^{2/3}.
BoundReport delta_bound(u64 p, u64 N, u64 M);

// Computes S and Delta_obs = S/(NM) and pairs them with delta_bound.
SweepRecord theorem1_experiment(const PrimeContext& ctx, u64 a, const Interval& nset,
                                const ExponentBlock& block);

// Mechanical evaluation of the Lemma 1 / Lemma 2 / Corollary 1 expressions.
LemmaBounds lemma_bounds(u64 p, u64 N, u64 M, u64 H, u64 uset_size);

// Exact J_k via convolution; observed = max over lambda of |J_k(lambda)*p/mass - 1|.
// Hypothesis margins against p^{1/3+eps} are recorded in extras, not enforced.
SweepRecord theorem2_experiment(const PrimeContext& ctx,
                                const std::vector<std::pair<Interval, ExponentBlock>>& factors,
                                u64 lambda, double eps = 0.05, const Limits& lim = Limits{});

// Coverage at k in {8,16} plus a replay of the proof construction: X from the
// half-length block, Y = {g^y} (k=8) or {g^{y1}+g^{y2}} (k=16) over 1..M/2,
// with the |X||Y| > 2p instance handed to glibichuk_check.
SweepRecord theorem34_experiment(const PrimeContext& ctx, const Interval& nset,
                                 const ExponentBlock& block, unsigned k,
                                 const Limits& lim = Limits{});

// Exact E_+ against M^{5/2}. Requires M < p^{2/3}.
BoundReport rrsh_monitor(const PrimeContext& ctx, const ExponentBlock& block,
                         const Limits& lim = Limits{});

// Runs the tasks through a work pool; results are ordered by task index, so
// output is deterministic regardless of thread count.
std::vector<SweepRecord> run_sweep(const std::vector<std::function<SweepRecord()>>& tasks,
                                   unsigned threads);

}  // namespace esl
