#include "navstat/bootstrap.hpp"
#include "navstat/error.hpp"
#include "navstat/mmd.hpp"
#include "navstat/parallel.hpp"
#include "navstat/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace navstat {

namespace {

struct IterCtx {
    detail::MmdWorkspace ws;
    std::vector<uint32_t> ix, iy;
};

void check_boot_args(size_t n, size_t m, const char* what) {
    if (n == 0) throw NavError(std::string(what) + ": empty sample distribution");
    if (m < 2) throw NavError(std::string(what) + ": subsample size m must be >= 2");
}

} // namespace

std::vector<double> bootstrap_separated(const SampleDistribution& x, const SampleDistribution& y,
                                        size_t m, size_t S, double sigma,
                                        uint64_t seed, uint64_t repeat, unsigned threads) {
    check_boot_args(x.n, m, "bootstrap_separated");
    check_boot_args(y.n, m, "bootstrap_separated");
    if (x.dim != y.dim) throw NavError("bootstrap_separated: dimension mismatch");

    std::vector<double> out(S);
    parallel_for_ctx<IterCtx>(
        S, threads, []() { return IterCtx{}; },
        [&](IterCtx& c, size_t i) {
            Rng rng(derive_seed(seed, {streams::kSeparated, repeat, (uint64_t)i}));
            c.ix.resize(m);
            c.iy.resize(m);
            for (size_t k = 0; k < m; ++k) c.ix[k] = (uint32_t)rng.below(x.n);
            for (size_t k = 0; k < m; ++k) c.iy[k] = (uint32_t)rng.below(y.n);
            out[i] = detail::mmd_indexed(x.data.data(), y.data.data(), x.dim,
                                         c.ix.data(), m, c.iy.data(), m, sigma, c.ws);
        });
    return out;
}

std::vector<double> bootstrap_pooled(const SampleDistribution& z,
                                     size_t m, size_t S, double sigma,
                                     uint64_t seed, uint64_t repeat, unsigned threads) {
    check_boot_args(z.n, m, "bootstrap_pooled");

    std::vector<double> out(S);
    parallel_for_ctx<IterCtx>(
        S, threads, []() { return IterCtx{}; },
        [&](IterCtx& c, size_t i) {
            Rng rng(derive_seed(seed, {streams::kPooled, repeat, (uint64_t)i}));
            c.ix.resize(m);
            c.iy.resize(m);
            for (size_t k = 0; k < m; ++k) c.ix[k] = (uint32_t)rng.below(z.n);
            for (size_t k = 0; k < m; ++k) c.iy[k] = (uint32_t)rng.below(z.n);
            out[i] = detail::mmd_indexed(z.data.data(), z.data.data(), z.dim,
                                         c.ix.data(), m, c.iy.data(), m, sigma, c.ws);
        });
    return out;
}

double quantile(std::vector<double> values, double alpha) {
    if (values.empty()) throw NavError("quantile: empty input");
    if (!(alpha > 0.0 && alpha < 1.0)) throw NavError("quantile: alpha must be in (0,1)");
    std::sort(values.begin(), values.end());
    size_t n = values.size();
    double r = alpha * (double)n;
    auto k = (size_t)std::ceil(r);
    // Round-off guard: 0.1*1000 evaluates just above 100 in doubles, but the
    // mathematical ceiling is still 100.
    if (k > 1 && (double)(k - 1) >= r - 1e-9 * std::max(1.0, r)) --k;
    if (k < 1) k = 1;
    if (k > n) k = n;
    return values[k - 1];
}

double p_value(const std::vector<double>& pooled_distances, double delta) {
    if (pooled_distances.empty()) throw NavError("p_value: empty distance distribution");
    size_t count = 0;
    for (double v : pooled_distances)
        if (v > delta) ++count;
    return (double)count / (double)pooled_distances.size();
}

double median(std::vector<double> values) {
    if (values.empty()) throw NavError("median: empty input");
    std::sort(values.begin(), values.end());
    size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

void build_histograms(const std::vector<double>& separated, const std::vector<double>& pooled,
                      Histogram& hist_sep, Histogram& hist_pool) {
    constexpr size_t kBins = 50;
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (double v : separated) { lo = std::min(lo, v); hi = std::max(hi, v); }
    for (double v : pooled) { lo = std::min(lo, v); hi = std::max(hi, v); }
    if (!(hi > lo)) hi = lo + 1.0; // degenerate spread: single bin catches all

    double width = (hi - lo) / (double)kBins;
    auto fill = [&](const std::vector<double>& vals, Histogram& h) {
        h.edges.resize(kBins + 1);
        for (size_t b = 0; b <= kBins; ++b) h.edges[b] = lo + width * (double)b;
        h.edges[kBins] = hi;
        h.counts.assign(kBins, 0);
        for (double v : vals) {
            auto b = (size_t)((v - lo) / width);
            if (b >= kBins) b = kBins - 1;
            ++h.counts[b];
        }
    };
    fill(separated, hist_sep);
    fill(pooled, hist_pool);
}

namespace {

struct RepeatOutcome {
    std::vector<double> sep, pool;
};

// Shared core: run R repeats of both bootstrap stages once, then evaluate the
// (delta, p) pair for each requested alpha on those same draws.
std::vector<TestResult> run_sweep(const SampleDistribution& x, const SampleDistribution& y,
                                  const TestConfig& cfg, const std::vector<double>& alphas) {
    if (alphas.empty()) throw NavError("sensitivity_sweep: no alpha values given");
    for (double a : alphas)
        if (!(a > 0.0 && a < 1.0)) throw NavError("alpha must be in (0,1)");
    if (cfg.repeats < 1) throw NavError("run_test: repeats must be >= 1");
    if (cfg.S < 1) throw NavError("run_test: iterations S must be >= 1");

    SampleDistribution z = pool(x, y);
    double sigma = cfg.sigma;
    if (sigma <= 0.0) {
        try {
            sigma = median_heuristic_bandwidth(z, cfg.pair_cap, cfg.seed);
        } catch (const DegenerateError& e) {
            throw DegenerateError(std::string(e.what()) +
                                  " (pooled bag of the two inputs is degenerate)");
        }
    }

    std::vector<RepeatOutcome> reps(cfg.repeats);
    for (size_t r = 0; r < cfg.repeats; ++r) {
        reps[r].sep = bootstrap_separated(x, y, cfg.m, cfg.S, sigma, cfg.seed, r, cfg.threads);
        reps[r].pool = bootstrap_pooled(z, cfg.m, cfg.S, sigma, cfg.seed, r, cfg.threads);
    }

    std::vector<TestResult> results;
    results.reserve(alphas.size());
    for (double a : alphas) {
        TestResult res;
        res.alpha = a;
        res.T = x.horizon == y.horizon ? x.horizon : 0;
        res.m = cfg.m;
        res.S = cfg.S;
        res.repeats = cfg.repeats;
        res.sigma = sigma;
        res.p_values.reserve(cfg.repeats);
        for (size_t r = 0; r < cfg.repeats; ++r) {
            double delta = quantile(reps[r].sep, a);
            res.p_values.push_back(p_value(reps[r].pool, delta));
            if (r + 1 == cfg.repeats) res.delta = delta;
        }
        res.p_median = median(res.p_values);
        if (cfg.repeats > 1) {
            res.p_iqr = quantile(res.p_values, 0.75) - quantile(res.p_values, 0.25);
        }
        build_histograms(reps.back().sep, reps.back().pool, res.hist_separated, res.hist_pooled);
        results.push_back(std::move(res));
    }
    return results;
}

} // namespace

TestResult run_test(const SampleDistribution& x, const SampleDistribution& y,
                    const TestConfig& cfg) {
    return run_sweep(x, y, cfg, {cfg.alpha}).front();
}

std::vector<TestResult> sensitivity_sweep(const SampleDistribution& x,
                                          const SampleDistribution& y,
                                          const TestConfig& cfg,
                                          const std::vector<double>& alphas) {
    return run_sweep(x, y, cfg, alphas);
}

namespace {

void put_num(std::string& s, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // JSON requires nan/inf to be absent; the pipeline never produces them.
    s += buf;
}

void put_hist(std::string& s, const Histogram& h) {
    s += "{\"counts\":[";
    for (size_t i = 0; i < h.counts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(h.counts[i]);
    }
    s += "],\"edges\":[";
    for (size_t i = 0; i < h.edges.size(); ++i) {
        if (i) s += ',';
        put_num(s, h.edges[i]);
    }
    s += "]}";
}

} // namespace

std::string histograms_to_json(const TestResult& r) {
    std::string s = "{\"pooled\":";
    put_hist(s, r.hist_pooled);
    s += ",\"separated\":";
    put_hist(s, r.hist_separated);
    s += "}";
    return s;
}

std::string test_result_to_json(const TestResult& r) {
    std::string s = "{";
    s += "\"T\":" + std::to_string(r.T);
    s += ",\"alpha\":";
    put_num(s, r.alpha);
    s += ",\"delta\":";
    put_num(s, r.delta);
    s += ",\"histograms\":" + histograms_to_json(r);
    s += ",\"m\":" + std::to_string(r.m);
    s += ",\"p_iqr\":";
    put_num(s, r.p_iqr);
    s += ",\"p_median\":";
    put_num(s, r.p_median);
    s += ",\"p_values\":[";
    for (size_t i = 0; i < r.p_values.size(); ++i) {
        if (i) s += ',';
        put_num(s, r.p_values[i]);
    }
    s += "],\"repeats\":" + std::to_string(r.repeats);
    s += ",\"S\":" + std::to_string(r.S);
    s += ",\"sigma\":";
    put_num(s, r.sigma);
    s += "}";
    return s;
}

} // namespace navstat
