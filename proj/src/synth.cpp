#include "navstat/synth.hpp"
#include "navstat/error.hpp"
#include "navstat/rng.hpp"

#include <cmath>
#include <cstdio>

namespace navstat {

SampleDistribution sample_gaussian(const GaussianSpec& spec) {
    if (spec.dim < 1) throw NavError("sample_gaussian: dim must be >= 1");
    if (!(spec.variance > 0.0)) throw NavError("sample_gaussian: variance must be positive");
    if (spec.n < 1) throw NavError("sample_gaussian: n must be >= 1");

    SampleDistribution d;
    d.n = spec.n;
    d.dim = spec.dim;
    d.horizon = 0;
    char tag[64];
    std::snprintf(tag, sizeof tag, "gaussian(eps=%g)", spec.mean_offset);
    d.source_agent = tag;
    d.data.resize(d.n * d.dim);

    Rng rng(derive_seed(spec.seed, {streams::kGaussian}));
    rng.fill_normal(d.data.data(), d.data.size());
    double sd = std::sqrt(spec.variance);
    if (sd != 1.0 || spec.mean_offset != 0.0)
        for (double& v : d.data) v = spec.mean_offset + sd * v;
    return d;
}

std::vector<ToyCell> run_toy_suite(const ToyConfig& cfg) {
    if (cfg.alphas.empty() || cfg.epsilons.empty())
        throw NavError("run_toy_suite: empty alpha or epsilon grid");

    std::vector<ToyCell> cells;
    cells.reserve(cfg.alphas.size() * cfg.epsilons.size());

    for (size_t ai = 0; ai < cfg.alphas.size(); ++ai) {
        for (size_t ei = 0; ei < cfg.epsilons.size(); ++ei) {
            ToyCell cell;
            cell.alpha = cfg.alphas[ai];
            cell.epsilon = cfg.epsilons[ei];

            TestResult combined;
            std::vector<double> ps;
            ps.reserve(cfg.repeats);
            for (size_t r = 0; r < cfg.repeats; ++r) {
                GaussianSpec gx{cfg.dim, 0.0, 1.0, cfg.n,
                                derive_seed(cfg.seed, {streams::kToyX, ai, ei, r})};
                GaussianSpec gy{cfg.dim, cfg.epsilons[ei], 1.0, cfg.n,
                                derive_seed(cfg.seed, {streams::kToyY, ai, ei, r})};
                SampleDistribution x = sample_gaussian(gx);
                SampleDistribution y = sample_gaussian(gy);

                TestConfig tc;
                tc.m = cfg.m;
                tc.S = cfg.S;
                tc.repeats = 1;
                tc.alpha = cfg.alphas[ai];
                tc.pair_cap = cfg.pair_cap;
                tc.threads = cfg.threads;
                tc.seed = derive_seed(cfg.seed, {streams::kToyTest, ai, ei, r});
                TestResult one = run_test(x, y, tc);
                ps.push_back(one.p_values.front());
                if (r + 1 == cfg.repeats) combined = std::move(one);
            }
            combined.repeats = cfg.repeats;
            combined.p_values = ps;
            combined.p_median = median(ps);
            combined.p_iqr = cfg.repeats > 1 ? quantile(ps, 0.75) - quantile(ps, 0.25) : 0.0;
            cell.result = std::move(combined);
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

std::string toy_cells_to_csv(const std::vector<ToyCell>& cells) {
    std::string s = "alpha,epsilon,p_median,p_iqr\n";
    char buf[128];
    for (const auto& c : cells) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", c.alpha, c.epsilon,
                      c.result.p_median, c.result.p_iqr);
        s += buf;
    }
    return s;
}

} // namespace navstat
