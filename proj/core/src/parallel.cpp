#include "strongk/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace strongk {

int worker_count() {
    static const int count = [] {
        if (const char* env = std::getenv("STRONGK_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        unsigned hc = std::thread::hardware_concurrency();
        return hc == 0 ? 1 : static_cast<int>(hc);
    }();
    return count;
}

void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    thread_local bool inside = false;
    int workers = worker_count();
    if (inside || workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto body = [&] {
        inside = true;
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
        inside = false;
    };
    size_t nthreads = std::min<size_t>(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(nthreads - 1);
    for (size_t t = 1; t < nthreads; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

} // namespace strongk
