#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

namespace mmset::util {

// Deterministic PRNG (splitmix64). Sampling must be reproducible across
// platforms and worker counts, so we never use std::uniform_int_distribution.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, n). n == 0 is a caller bug.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::logic_error("Rng::below(0)");
        // rejection sampling keeps the draw unbiased and deterministic
        uint64_t limit = n * (UINT64_MAX / n);
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }
};

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Per-check seed derivation: the report records the master seed once and each
// check's effective stream is a stable function of (seed, check name).
inline uint64_t derive_seed(uint64_t master, std::string_view tag) {
    Rng r(master ^ fnv1a(tag));
    return r.next();
}

inline unsigned effective_workers(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Static partition of [0, n) into chunks, one thread per chunk. Results must
// be merged by chunk index by the caller so the outcome is independent of
// scheduling (and of the worker count when the reduction is canonical).
inline void parallel_for(uint64_t n, unsigned workers,
                         const std::function<void(uint64_t, uint64_t, unsigned)>& chunk) {
    workers = effective_workers(workers);
    if (n == 0) return;
    if (workers <= 1 || n < 2 * workers) {
        chunk(0, n, 0);
        return;
    }
    std::vector<std::thread> threads;
    uint64_t per = n / workers, rem = n % workers;
    uint64_t begin = 0;
    for (unsigned t = 0; t < workers; ++t) {
        uint64_t len = per + (t < rem ? 1 : 0);
        uint64_t end = begin + len;
        threads.emplace_back([&chunk, begin, end, t] { chunk(begin, end, t); });
        begin = end;
    }
    for (auto& th : threads) th.join();
}

}  // namespace mmset::util
