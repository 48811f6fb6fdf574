#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace tideal {

inline constexpr const char* workers_env = "TIDEAL_WORKERS";

// TIDEAL_WORKERS if set to a positive integer, else the hardware concurrency.
inline int default_workers() {
    if (const char* e = std::getenv(workers_env)) {
        try {
            int w = std::stoi(e);
            if (w > 0) return w;
        } catch (const std::exception&) {
        }
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

// Runs fn(i) for i in [0, count). Results must be written to per-index slots
// so that the outcome does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    int n = static_cast<int>(std::min<std::size_t>(count, static_cast<std::size_t>(workers)));
    for (int t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace tideal
