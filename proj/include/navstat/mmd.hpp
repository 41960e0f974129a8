#pragma once

#include "navstat/movement.hpp"

#include <cstdint>
#include <vector>

namespace navstat {

// exp(-||u-v||^2 / (2*sigma^2)); value in (0, 1], 1 iff u == v.
double gaussian_kernel(const double* u, const double* v, size_t dim, double sigma);
double gaussian_kernel(const std::vector<double>& u, const std::vector<double>& v, double sigma);

// Median pairwise Euclidean distance over the bag.  All unordered pairs when
// their count fits pair_cap, else a seeded uniform subsample of pair_cap
// pairs (i != j).  Even counts take the mean of the two middle order
// statistics.  Throws DegenerateError when every sampled distance is zero;
// if only the median is zero (mass of duplicates) the median of the positive
// distances is used so the kernel keeps a usable scale.
double median_heuristic_bandwidth(const SampleDistribution& z,
                                  size_t pair_cap = 1000000,
                                  uint64_t bandwidth_seed = 0);

// Pairwise (V-statistic) MMD of Eq.-1 form, diagonals included:
//   (1/nx^2) sum k(x_i,x_j) + (1/ny^2) sum k(y_i,y_j) - (2/(nx ny)) sum k(x_i,y_j)
// Non-negative up to round-off; exactly 0 for identical bags.
double mmd_pairwise(const SampleDistribution& x, const SampleDistribution& y, double sigma);

namespace detail {

// Scratch for the subsampled-MMD hot path (bootstrap iterations).
struct MmdWorkspace {
    std::vector<double> ax, ay;   // gathered rows, m x dim each
    std::vector<double> nx, ny;   // squared row norms
    std::vector<double> gram;     // m x m products
};

// Sum of kernel values over the full A x B grid (na x nb rows of dim).
double kernel_block_sum(const double* A, size_t na, const double* B, size_t nb,
                        size_t dim, double sigma, MmdWorkspace* ws);

// MMD over selected rows: X[ix[0..m)], Y[iy[0..m)].
double mmd_indexed(const double* X, const double* Y, size_t dim,
                   const uint32_t* ix, size_t mx, const uint32_t* iy, size_t my,
                   double sigma, MmdWorkspace& ws);

} // namespace detail

} // namespace navstat
