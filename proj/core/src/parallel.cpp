#include "frospec/detail/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace frospec::detail {

int thread_cap() {
    if (const char* env = std::getenv("FROZEN_SPECTRA_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

void parallel_for(int n, const std::function<void(int)>& body) {
    const int k = std::min({thread_cap(), n, 64});
    if (k <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(k);
    std::exception_ptr error;
    std::mutex guard;
    for (int t = 0; t < k; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < n; i += k) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(guard);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace frospec::detail
