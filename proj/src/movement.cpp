#include "navstat/movement.hpp"
#include "navstat/error.hpp"
#include "navstat/parallel.hpp"

#include <algorithm>
#include <iostream>

namespace navstat {

void normalize_trajectory(const std::array<double, 3>* window, size_t T, double* out) {
    const auto& c0 = window[0];
    for (size_t t = 1; t <= T; ++t) {
        out[3 * (t - 1) + 0] = window[t][0] - c0[0];
        out[3 * (t - 1) + 1] = window[t][1] - c0[1];
        out[3 * (t - 1) + 2] = window[t][2] - c0[2];
    }
}

std::vector<double> normalize_trajectory(const std::vector<std::array<double, 3>>& window) {
    if (window.size() < 2)
        throw NavError("normalize_trajectory: window must hold T+1 >= 2 points");
    size_t T = window.size() - 1;
    std::vector<double> out(3 * T);
    normalize_trajectory(window.data(), T, out.data());
    return out;
}

std::vector<double> subsample_episode(const Episode& ep, size_t T, size_t K, Rng& rng,
                                      std::vector<uint32_t>* starts) {
    size_t N = ep.coords.size();
    if (N <= T)
        throw NavError("subsample_episode: episode '" + ep.episode_id + "' has length " +
                       std::to_string(N) + " <= T=" + std::to_string(T));
    size_t n_starts = N - T; // admissible starts 0..N-T-1, each with prob 1/(N-T)
    std::vector<double> out(K * 3 * T);
    for (size_t k = 0; k < K; ++k) {
        auto s = (size_t)rng.below(n_starts);
        normalize_trajectory(ep.coords.data() + s, T, out.data() + k * 3 * T);
        if (starts) starts->push_back((uint32_t)s);
    }
    return out;
}

SampleDistribution build_sample_distribution(const EpisodeSet& set, const SubsampleConfig& cfg) {
    if (cfg.T == 0) throw NavError("build_sample_distribution: T must be positive");

    std::vector<size_t> retained; // original episode indices
    size_t K = 0;
    for (size_t i = 0; i < set.episodes.size(); ++i) {
        size_t N = set.episodes[i].coords.size();
        if (N > cfg.T) {
            retained.push_back(i);
            K = std::max(K, N);
        } else if (cfg.drop_short_episodes) {
            std::cerr << "warning: episode '" << set.episodes[i].episode_id << "' has length "
                      << N << " <= T=" << cfg.T << "; dropped\n";
        } else {
            throw NavError("build_sample_distribution: episode '" + set.episodes[i].episode_id +
                           "' has length " + std::to_string(N) + " <= T=" + std::to_string(cfg.T) +
                           " and drop_short_episodes is off");
        }
    }
    if (retained.empty())
        throw NavError("build_sample_distribution: all episodes shorter than T+1=" +
                       std::to_string(cfg.T + 1) + "; nothing to sample");

    size_t M = retained.size();
    size_t dim = 3 * cfg.T;
    SampleDistribution d;
    d.n = M * K;
    d.dim = dim;
    d.horizon = cfg.T;
    d.source_agent = set.agent_id;
    d.data.resize(d.n * dim);
    d.provenance.resize(d.n);

    // Per-episode streams named by the original episode index: results do not
    // depend on worker count or on which episodes were dropped.
    parallel_for(M, cfg.threads, [&](size_t mi) {
        size_t ei = retained[mi];
        const Episode& ep = set.episodes[ei];
        Rng rng(derive_seed(cfg.seed, {streams::kSubsample, (uint64_t)ei}));
        size_t n_starts = ep.coords.size() - cfg.T;
        double* out = d.data.data() + mi * K * dim;
        for (size_t k = 0; k < K; ++k) {
            auto s = (size_t)rng.below(n_starts);
            normalize_trajectory(ep.coords.data() + s, cfg.T, out + k * dim);
            d.provenance[mi * K + k] = {(uint32_t)ei, (uint32_t)s};
        }
    });
    return d;
}

SampleDistribution pool(const SampleDistribution& x, const SampleDistribution& y) {
    if (x.dim != y.dim)
        throw NavError("pool: dimension mismatch (" + std::to_string(x.dim) + " vs " +
                       std::to_string(y.dim) + ")");
    if (x.horizon != y.horizon)
        throw NavError("pool: horizon mismatch (T=" + std::to_string(x.horizon) + " vs T=" +
                       std::to_string(y.horizon) + ")");
    SampleDistribution z;
    z.n = x.n + y.n;
    z.dim = x.dim;
    z.horizon = x.horizon;
    z.source_agent = x.source_agent == y.source_agent ? x.source_agent
                                                      : x.source_agent + "+" + y.source_agent;
    z.data.reserve(z.n * z.dim);
    z.data.insert(z.data.end(), x.data.begin(), x.data.end());
    z.data.insert(z.data.end(), y.data.begin(), y.data.end());
    if (!x.provenance.empty() && !y.provenance.empty()) {
        z.provenance.reserve(z.n);
        z.provenance.insert(z.provenance.end(), x.provenance.begin(), x.provenance.end());
        z.provenance.insert(z.provenance.end(), y.provenance.begin(), y.provenance.end());
    }
    return z;
}

} // namespace navstat
