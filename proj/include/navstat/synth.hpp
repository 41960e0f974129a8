#pragma once

#include "navstat/bootstrap.hpp"
#include "navstat/movement.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace navstat {

struct GaussianSpec {
    size_t dim = 128;
    double mean_offset = 0.0; // applied to every coordinate
    double variance = 1.0;
    size_t n = 10000;
    uint64_t seed = 0;
};

// n i.i.d. dim-dimensional draws, each coordinate Normal(mean_offset, variance).
SampleDistribution sample_gaussian(const GaussianSpec& spec);

struct ToyConfig {
    std::vector<double> alphas{0.10, 0.25, 0.50};
    std::vector<double> epsilons{0.0, 0.02, 0.04, 0.06, 0.08, 0.10};
    size_t dim = 128;
    size_t n = 10000; // source-sample size per side
    size_t m = 100;
    size_t S = 1000;
    size_t repeats = 10;
    uint64_t seed = 0;
    size_t pair_cap = 1000000;
    unsigned threads = 1;
};

struct ToyCell {
    double alpha = 0.0;
    double epsilon = 0.0;
    TestResult result; // p_values over all repeats; delta/sigma/histograms of the final one
};

// The full (alpha, epsilon) grid.  X ~ N(0,1)^dim and Y ~ N(eps,1)^dim are
// re-drawn per repeat with a fresh bandwidth, so each repeat is an
// independent replication of the whole experiment.
std::vector<ToyCell> run_toy_suite(const ToyConfig& cfg);

// CSV with header alpha,epsilon,p_median,p_iqr at full precision.
std::string toy_cells_to_csv(const std::vector<ToyCell>& cells);

} // namespace navstat
