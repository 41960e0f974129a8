#pragma once

#include "navstat/episode.hpp"
#include "navstat/rng.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace navstat {

// A bag of movement vectors, stored row-major.  horizon (T) is set when the
// bag was built from trajectory windows, in which case dim == 3*T; synthetic
// bags (Gaussian toys) carry horizon == 0 and a free-standing dim.
struct SampleDistribution {
    size_t n = 0;
    size_t dim = 0;
    size_t horizon = 0;
    std::string source_agent;
    std::vector<double> data;
    // (episode index, window start) per row; empty for synthetic bags.
    std::vector<std::pair<uint32_t, uint32_t>> provenance;

    const double* row(size_t i) const { return data.data() + i * dim; }
    double* row(size_t i) { return data.data() + i * dim; }
};

struct SubsampleConfig {
    size_t T = 4;                    // horizon: windows span T+1 coordinates
    uint64_t seed = 0;
    bool drop_short_episodes = true; // episodes with N <= T are skipped (warned)
    unsigned threads = 1;
};

// window: T+1 consecutive points c_0..c_T; out: 3T values c_t - c_0, t=1..T.
// The normalized c_0 entry is identically zero and is dropped.
void normalize_trajectory(const std::array<double, 3>* window, size_t T, double* out);
std::vector<double> normalize_trajectory(const std::vector<std::array<double, 3>>& window);

// K windows drawn uniformly with replacement from the N-T admissible start
// positions of one episode, each normalized.  Start indices are optionally
// reported for provenance.
std::vector<double> subsample_episode(const Episode& ep, size_t T, size_t K, Rng& rng,
                                      std::vector<uint32_t>* starts = nullptr);

// K = max episode length over retained episodes; every retained episode
// contributes exactly K vectors, so the result has M*K rows.
SampleDistribution build_sample_distribution(const EpisodeSet& set, const SubsampleConfig& cfg);

SampleDistribution pool(const SampleDistribution& x, const SampleDistribution& y);

} // namespace navstat
