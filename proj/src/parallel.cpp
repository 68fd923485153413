#include "oft/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

namespace oft {

int worker_count() {
    if (const char* env = std::getenv("OFT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<int>(std::min(v, 256L));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Minimum items per worker; below this the spawn overhead dominates.
constexpr std::size_t kGrain = 1024;

template <typename Chunk>
void run_chunks(std::size_t n, int threads, const Chunk& chunk) {
    std::size_t per = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (int t = 1; t < threads; ++t) {
        std::size_t b = per * t;
        if (b >= n) break;
        pool.emplace_back(chunk, t, b, std::min(n, b + per));
    }
    chunk(0, 0, std::min(n, per));
    for (auto& th : pool) th.join();
}

} // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t grain) {
    if (n == 0) return;
    int threads = worker_count();
    if (threads <= 1 || n < std::max<std::size_t>(2, grain)) {
        fn(0, n);
        return;
    }
    run_chunks(n, threads, [&fn](int, std::size_t b, std::size_t e) { fn(b, e); });
}

double parallel_max(std::size_t n, const std::function<double(std::size_t, std::size_t)>& fn) {
    if (n == 0) return 0.0;
    int threads = worker_count();
    if (threads <= 1 || n < 2 * kGrain) return fn(0, n);
    std::vector<double> part(static_cast<std::size_t>(threads),
                             -std::numeric_limits<double>::infinity());
    run_chunks(n, threads, [&fn, &part](int t, std::size_t b, std::size_t e) { part[t] = fn(b, e); });
    double m = part[0];
    for (double v : part) m = std::max(m, v);
    return m;
}

} // namespace oft
