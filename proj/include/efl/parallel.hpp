#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace efl {

// EFL_THREADS overrides any requested worker count.
inline unsigned resolve_thread_count(unsigned requested) {
    if (const char* env = std::getenv("EFL_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<unsigned>(v);
    }
    return requested >= 1 ? requested : 1;
}

// Runs f(0..job_count-1), each job exactly once. Job results must be written
// to per-job slots by the caller so that merging happens in job order; values
// are then independent of the worker count.
inline void parallel_for_jobs(std::size_t job_count, unsigned threads,
                              const std::function<void(std::size_t)>& f) {
    threads = std::max(1u, threads);
    if (threads == 1 || job_count <= 1) {
        for (std::size_t i = 0; i < job_count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= job_count) return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(threads, job_count);
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace efl
