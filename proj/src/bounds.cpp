#include "expsumlab/bounds.hpp"

#include "expsumlab/parallel.hpp"

#include <chrono>
#include <cmath>

namespace esl {

namespace {

double sum_terms(const std::vector<std::pair<std::string, double>>& terms) {
    double total = 0.0;
    for (const auto& [name, t] : terms) {
        if (!(t >= 0.0)) throw std::logic_error("bound term " + name + " is negative");
        total += t;
    }
    return total;
}

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

SweepRecord base_record(const PrimeContext& ctx) {
    SweepRecord r;
    r.p = ctx.p();
    r.g = ctx.g();
    r.T = ctx.order();
    return r;
}

}  // namespace

BoundReport delta_bound(u64 p, u64 N, u64 M) {
    if (p == 0 || N == 0 || M == 0)
        throw std::invalid_argument("delta_bound: arguments must be positive");
    const double pd = double(p), Nd = double(N), Md = double(M);
    if (!(Md < std::pow(pd, 2.0 / 3.0)))
        throw HypothesisViolated("delta_bound: requires M < p^{2/3}");
    BoundReport r;
    r.bound_terms = {
        {"M^{-3/8}", std::pow(Md, -0.375)},
        {"(p/(N*M^{5/2}))^{1/4}", std::pow(pd / (Nd * std::pow(Md, 2.5)), 0.25)},
        {"(p/(N^{4/3}*M^{7/3}))^{3/16}",
         std::pow(pd / (std::pow(Nd, 4.0 / 3.0) * std::pow(Md, 7.0 / 3.0)), 3.0 / 16.0)},
        {"(p/(N^2*M^{3/2}))^{1/4}", std::pow(pd / (Nd * Nd * std::pow(Md, 1.5)), 0.25)},
    };
    r.bound_total = sum_terms(r.bound_terms);
    r.trivial_bound = 1.0;  // Delta = S/(NM) <= 1 always
    r.nontrivial = r.bound_total < r.trivial_bound;
    return r;
}

SweepRecord theorem1_experiment(const PrimeContext& ctx, u64 a, const Interval& nset,
                                const ExponentBlock& block) {
    const Stopwatch sw;
    const BoundReport bound = delta_bound(ctx.p(), nset.N, block.M);
    const double s = total_sum_S(ctx, a, nset, block);
    SweepRecord r = base_record(ctx);
    r.a = a;
    r.u = nset.u;
    r.v = block.v;
    r.N = nset.N;
    r.M = block.M;
    r.observed = s / (double(nset.N) * double(block.M));  // Delta_obs
    r.bound_total = bound.bound_total;
    r.ratio = r.observed / r.bound_total;
    r.nontrivial = bound.nontrivial;
    r.extras = bound.bound_terms;
    r.extras.emplace_back("S", s);
    r.wall_ms = sw.ms();
    return r;
}

LemmaBounds lemma_bounds(u64 p, u64 N, u64 M, u64 H, u64 uset_size) {
    if (p == 0 || N == 0 || M == 0 || H == 0 || uset_size == 0)
        throw std::invalid_argument("lemma_bounds: arguments must be positive");
    const double pd = double(p), Nd = double(N), Md = double(M), Hd = double(H),
                 Ud = double(uset_size);
    LemmaBounds lb;
    lb.lemma1.bound_terms = {
        {"|U|*H", Ud * Hd},
        {"|U|^2*H^2/p", Ud * Ud * Hd * Hd / pd},
        {"|U|^{7/4}*H/p^{1/4}", std::pow(Ud, 1.75) * Hd / std::pow(pd, 0.25)},
    };
    lb.lemma1.bound_total = sum_terms(lb.lemma1.bound_terms);
    lb.lemma1.trivial_bound = Ud * Ud * Hd * Hd;  // J0 <= (|U|H)^2
    lb.lemma1.nontrivial = lb.lemma1.bound_total < lb.lemma1.trivial_bound;

    lb.lemma2.bound_terms = {
        {"M^2", Md * Md},
        {"M*N", Md * Nd},
        {"M^2*N^2/p", Md * Md * Nd * Nd / pd},
        {"M^{7/4}*N/p^{1/4}", std::pow(Md, 1.75) * Nd / std::pow(pd, 0.25)},
    };
    lb.lemma2.bound_total = sum_terms(lb.lemma2.bound_terms);
    lb.lemma2.trivial_bound = Nd * Nd * Md * Md;  // J <= (NM)^2
    lb.lemma2.nontrivial = lb.lemma2.bound_total < lb.lemma2.trivial_bound;

    const double candidates[4] = {Nd * Nd, Nd * Md, pd,
                                  std::pow(pd, 0.25) * std::pow(Md, 0.25) * Nd};
    double lo = candidates[0];
    for (double c : candidates) lo = std::min(lo, c);
    lb.corollary1.bound_terms = {{"min{N^2,NM,p,p^{1/4}M^{1/4}N}", lo}};
    lb.corollary1.bound_total = lo;
    lb.corollary1.trivial_bound = std::min(Nd * Md, pd);  // support size ceiling
    lb.corollary1.nontrivial = lb.corollary1.bound_total < lb.corollary1.trivial_bound;
    return lb;
}

SweepRecord theorem2_experiment(const PrimeContext& ctx,
                                const std::vector<std::pair<Interval, ExponentBlock>>& factors,
                                u64 lambda, double eps, const Limits& lim) {
    const Stopwatch sw;
    if (lambda >= ctx.p()) throw std::invalid_argument("theorem2_experiment: lambda out of range");
    const RepFunction jk = j_k_counts(ctx, factors, lim);
    const BigUint mass = jk.mass();
    const double main_term = mass.to_double() / double(ctx.p());
    if (!(main_term > 0.0))
        throw std::invalid_argument("theorem2_experiment: degenerate zero mass");

    double max_dev = 0.0;
    for (u64 t = 0; t < ctx.p(); ++t)
        max_dev = std::max(max_dev, std::abs(jk.count(t).to_double() / main_term - 1.0));

    // hypothesis N_i, M_i > p^{1/3+eps}: record the worst margin, do not gate
    const double threshold = std::pow(double(ctx.p()), 1.0 / 3.0 + eps);
    double min_margin = double(factors[0].first.N) / threshold;
    for (const auto& [nset, block] : factors) {
        min_margin = std::min(min_margin, double(nset.N) / threshold);
        min_margin = std::min(min_margin, double(block.M) / threshold);
    }

    SweepRecord r = base_record(ctx);
    r.u = factors[0].first.u;
    r.v = factors[0].second.v;
    r.N = factors[0].first.N;
    r.M = factors[0].second.M;
    r.k = unsigned(factors.size());
    r.observed = max_dev;
    r.extras.emplace_back("j_lambda", jk.count(lambda).to_double());
    r.extras.emplace_back("mass", mass.to_double());
    r.extras.emplace_back("main_term", main_term);
    r.extras.emplace_back("hyp_margin", min_margin);
    r.extras.emplace_back("eps", eps);
    r.wall_ms = sw.ms();
    return r;
}

SweepRecord theorem34_experiment(const PrimeContext& ctx, const Interval& nset,
                                 const ExponentBlock& block, unsigned k, const Limits& lim) {
    const Stopwatch sw;
    if (k != 8 && k != 16) throw std::invalid_argument("theorem34_experiment: k must be 8 or 16");
    const u64 m1 = block.M / 2;
    if (m1 == 0)
        throw std::invalid_argument("theorem34_experiment: block too short for the half-split");

    const CoverageResult cov = coverage(ctx, nset, block, k, lim);

    // proof construction: X over the half-length block, Y over exponents 1..M1
    const ExponentBlock half{block.v, m1, false};
    const std::vector<u64> xset = rep_function_product(ctx, nset, half, lim).support();
    std::vector<u64> yset;
    const ExponentBlock unit_start{0, m1, false};  // exponents 1..M1
    if (k == 8) {
        yset.reserve(m1);
        u64 pw = ctx.pow_g(1);
        for (u64 i = 0; i < m1; ++i) {
            yset.push_back(pw);
            pw = mul_mod(pw, ctx.g(), ctx.p());
        }
    } else {
        yset = pair_sum_rep(ctx, unit_start, lim).support();
    }
    const GlibichukReport glib = glibichuk_check(ctx, xset, yset, lim);

    SweepRecord r = base_record(ctx);
    r.u = nset.u;
    r.v = block.v;
    r.N = nset.N;
    r.M = block.M;
    r.k = k;
    r.observed = cov.covered ? 1.0 : 0.0;
    r.extras.emplace_back("support", double(cov.support_size));
    r.extras.emplace_back("misses", double(cov.misses.size()));
    r.extras.emplace_back("x_size", double(xset.size()));
    r.extras.emplace_back("y_size", double(yset.size()));
    r.extras.emplace_back("xy_gt_2p", glib.hypothesis ? 1.0 : 0.0);
    r.extras.emplace_back("glib_covered", glib.covered ? 1.0 : 0.0);
    r.wall_ms = sw.ms();
    return r;
}

BoundReport rrsh_monitor(const PrimeContext& ctx, const ExponentBlock& block, const Limits& lim) {
    const double Md = double(block.M);
    if (!(Md < std::pow(double(ctx.p()), 2.0 / 3.0)))
        throw HypothesisViolated("rrsh_monitor: requires M < p^{2/3}");
    const EnergyReport e = additive_energy_geo(ctx, block, lim);
    BoundReport r;
    r.bound_terms = {{"M^{5/2}", std::pow(Md, 2.5)}};
    r.bound_total = sum_terms(r.bound_terms);
    r.observed = u128_to_double(e.value);
    r.ratio = r.observed / r.bound_total;
    r.trivial_bound = Md * Md * Md;  // E_+ <= M^3
    r.nontrivial = r.bound_total < r.trivial_bound;
    if (r.observed > r.trivial_bound * (1.0 + 1e-9))
        throw std::logic_error("rrsh_monitor: E_+ exceeded its combinatorial ceiling");
    return r;
}

std::vector<SweepRecord> run_sweep(const std::vector<std::function<SweepRecord()>>& tasks,
                                   unsigned threads) {
    std::vector<SweepRecord> out(tasks.size());
    for_each_chunk(tasks.size(), 1, threads,
                   [&](std::size_t idx, u64, u64) { out[idx] = tasks[idx](); });
    return out;
}

}  // namespace esl
