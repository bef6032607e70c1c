#pragma once

// Deterministic chunked parallelism.
//
// Work is split into fixed-size chunks whose boundaries depend only on the
// chunk size, never on the thread count. Per-chunk partial results are
// combined in chunk-index order, so every reduction is bit-identical for
// 1 thread and for 64.

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

#include "divnet/common.hpp"

namespace divnet {

struct ParallelConfig {
    unsigned threads = 0;  // 0 = std::thread::hardware_concurrency()

    unsigned resolved_threads() const {
        if (threads != 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }
};

// Runs fn(chunk_index, begin, end) over [first, last) split into fixed chunks.
// fn must only touch state owned by its chunk.
template <typename Fn>
void for_each_chunk(u64 first, u64 last, u64 chunk_size, const ParallelConfig& cfg, Fn&& fn) {
    if (last <= first) return;
    if (chunk_size == 0) chunk_size = 1;
    const u64 total = last - first;
    const u64 n_chunks = (total + chunk_size - 1) / chunk_size;
    unsigned n_threads = cfg.resolved_threads();
    if (n_threads > n_chunks) n_threads = static_cast<unsigned>(n_chunks);

    if (n_threads <= 1) {
        for (u64 c = 0; c < n_chunks; ++c) {
            const u64 b = first + c * chunk_size;
            const u64 e = b + chunk_size < last ? b + chunk_size : last;
            fn(c, b, e);
        }
        return;
    }

    std::atomic<u64> next{0};
    auto worker = [&] {
        for (;;) {
            const u64 c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks) break;
            const u64 b = first + c * chunk_size;
            const u64 e = b + chunk_size < last ? b + chunk_size : last;
            fn(c, b, e);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads - 1);
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

// Chunked map-reduce: `map` produces one partial per chunk, partials are
// folded into `init` in ascending chunk order.
template <typename T, typename Map, typename Fold>
T chunked_reduce(u64 first, u64 last, u64 chunk_size, const ParallelConfig& cfg, T init,
                 Map&& map, Fold&& fold) {
    if (last <= first) return init;
    if (chunk_size == 0) chunk_size = 1;
    const u64 n_chunks = (last - first + chunk_size - 1) / chunk_size;
    std::vector<T> partials(static_cast<std::size_t>(n_chunks), init);
    for_each_chunk(first, last, chunk_size, cfg,
                   [&](u64 c, u64 b, u64 e) { partials[static_cast<std::size_t>(c)] = map(b, e); });
    T acc = init;
    for (const T& p : partials) acc = fold(acc, p);
    return acc;
}

}  // namespace divnet
