#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace navstat {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; also used as the mixing step when deriving stream seeds.
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Derive an independent stream seed from a master seed plus a path of tags
// (e.g. {kStreamPooled, repeat, iteration}).  Every random decision in the
// toolkit flows through this, which is what makes results independent of
// scheduling: each unit of work owns a stream named by *what* it is, never
// by *when* it ran.
inline uint64_t derive_seed(uint64_t seed, std::initializer_list<uint64_t> path) {
    uint64_t h = seed;
    for (uint64_t p : path)
        h = mix64((h + kGolden) ^ mix64(p + kGolden));
    return h;
}

// Stream tags.  Arbitrary distinct constants; frozen so that identical seeds
// reproduce identical runs across versions.
namespace streams {
constexpr uint64_t kSeparated = 1;  // bootstrap iterations, separated stage
constexpr uint64_t kPooled    = 2;  // bootstrap iterations, pooled stage
constexpr uint64_t kBandwidth = 3;  // median-heuristic pair subsampling
constexpr uint64_t kSubsample = 4;  // per-episode window subsampling
constexpr uint64_t kGaussian  = 5;  // synthetic Gaussian draws
constexpr uint64_t kToyX      = 6;
constexpr uint64_t kToyY      = 7;
constexpr uint64_t kToyTest   = 8;
constexpr uint64_t kMazeGen   = 9;
constexpr uint64_t kMaze      = 10; // per-episode maze seed in simulate
constexpr uint64_t kPolicy    = 11; // per-episode policy stream in simulate
} // namespace streams

// splitmix64: 64 bits of state, passes BigCrush, and splitting is just
// deriving a fresh state — exactly the property the concurrency contract
// needs.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed = 0) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += kGolden);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    // Unbiased integer in [0, n).  Lemire's multiply-shift with rejection.
    uint64_t below(uint64_t n) {
        unsigned __int128 m = (unsigned __int128)next() * n;
        auto lo = (uint64_t)m;
        if (lo < n) {
            uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = (unsigned __int128)next() * n;
                lo = (uint64_t)m;
            }
        }
        return (uint64_t)(m >> 64);
    }

    size_t index(size_t n) { return (size_t)below((uint64_t)n); }

    // One standard normal via Box-Muller (sine branch discarded: constant
    // two-draw cost keeps stream consumption position-independent).
    double normal() {
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Bulk fill, using both Box-Muller branches.  Stream-incompatible with
    // repeated normal() calls by design; each call site commits to one form.
    void fill_normal(double* dst, size_t count) {
        size_t i = 0;
        while (i + 1 < count) {
            double u1 = 0.0;
            do { u1 = uniform(); } while (u1 <= 0.0);
            double u2 = uniform();
            double r = std::sqrt(-2.0 * std::log(u1));
            double a = 6.283185307179586476925287 * u2;
            dst[i++] = r * std::cos(a);
            dst[i++] = r * std::sin(a);
        }
        if (i < count) dst[i] = normal();
    }
};

} // namespace navstat
