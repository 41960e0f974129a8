#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace navstat {

// Static contiguous partition of [0, n) over `threads` workers.  Each body
// call owns its index; callers write results into preallocated slots, so the
// outcome is identical for any thread count.  make_ctx() builds one scratch
// context per worker (kernel workspaces and the like).
template <typename Ctx>
void parallel_for_ctx(size_t n, unsigned threads,
                      const std::function<Ctx()>& make_ctx,
                      const std::function<void(Ctx&, size_t)>& body) {
    if (n == 0) return;
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || n == 1) {
        Ctx ctx = make_ctx();
        for (size_t i = 0; i < n; ++i) body(ctx, i);
        return;
    }
    unsigned workers = (unsigned)std::min<size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = (size_t)w * chunk;
        size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi]() {
            Ctx ctx = make_ctx();
            for (size_t i = lo; i < hi; ++i) body(ctx, i);
        });
    }
    for (auto& t : pool) t.join();
}

inline void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& body) {
    parallel_for_ctx<int>(n, threads, []() { return 0; },
                          [&](int&, size_t i) { body(i); });
}

} // namespace navstat
