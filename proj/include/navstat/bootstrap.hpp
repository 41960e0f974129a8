#pragma once

#include "navstat/movement.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace navstat {

struct TestConfig {
    size_t m = 1000;       // subsample size per bootstrap draw
    size_t S = 1000;       // bootstrap iterations per stage
    size_t repeats = 10;   // R: median/IQR are reported over repeats
    double alpha = 0.10;
    double sigma = 0.0;    // 0 = median heuristic on the pooled bag
    uint64_t seed = 0;
    size_t pair_cap = 1000000;
    unsigned threads = 1;
};

struct Histogram {
    std::vector<double> edges;    // 51 edges for 50 equal-width bins
    std::vector<uint64_t> counts; // 50 counts
};

struct TestResult {
    double delta = 0.0;  // test statistic of the final repeat
    double alpha = 0.0;
    size_t T = 0;        // horizon of the input bags; 0 for synthetic bags
    size_t m = 0, S = 0, repeats = 0;
    std::vector<double> p_values; // one per repeat
    double p_median = 0.0;
    double p_iqr = 0.0;
    double sigma = 0.0;
    Histogram hist_separated, hist_pooled; // final repeat
};

// S MMD distances, iteration i drawing m indices from x then m from y, both
// with replacement, on the stream (seed, repeat, kind, i).
std::vector<double> bootstrap_separated(const SampleDistribution& x, const SampleDistribution& y,
                                        size_t m, size_t S, double sigma,
                                        uint64_t seed, uint64_t repeat, unsigned threads = 1);

// Same, with both pseudo-samples drawn from the pooled bag z.
std::vector<double> bootstrap_pooled(const SampleDistribution& z,
                                     size_t m, size_t S, double sigma,
                                     uint64_t seed, uint64_t repeat, unsigned threads = 1);

// Ceiling order statistic: the ceil(alpha*n)-th smallest value (1-based) —
// the smallest value whose empirical CDF reaches alpha.
double quantile(std::vector<double> values, double alpha);

// Fraction of distances strictly greater than delta.
double p_value(const std::vector<double>& pooled_distances, double delta);

// Classic median (mean of the two middle order statistics when even).
double median(std::vector<double> values);

TestResult run_test(const SampleDistribution& x, const SampleDistribution& y,
                    const TestConfig& cfg);

// One result per alpha, all sharing the same bootstrap draws, so delta is
// non-decreasing and p non-increasing in alpha by construction.
std::vector<TestResult> sensitivity_sweep(const SampleDistribution& x,
                                          const SampleDistribution& y,
                                          const TestConfig& cfg,
                                          const std::vector<double>& alphas);

// Build the 50-bin histograms spanning min..max of (separated U pooled).
void build_histograms(const std::vector<double>& separated, const std::vector<double>& pooled,
                      Histogram& hist_sep, Histogram& hist_pool);

// JSON document with all numbers at full precision (17 significant digits).
std::string test_result_to_json(const TestResult& r);
std::string histograms_to_json(const TestResult& r); // the histograms sub-object

} // namespace navstat
