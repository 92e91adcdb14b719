#include "wavekin/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace wavekin {

namespace {
int g_workers = 0;  // 0 = uninitialized, resolve to hardware concurrency
}

void set_worker_count(int n) { g_workers = n > 0 ? n : 0; }

int worker_count() {
    if (g_workers > 0) return g_workers;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int nw = worker_count();
    if (nw <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> threads;
    const int count = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(nw)));
    threads.reserve(count);
    for (int t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

}  // namespace wavekin
