#pragma once

#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace prenichols {

/**
 * Applies fn to 0..n-1 with a fixed worker count and returns results in index
 * order, so parallel and serial runs produce identical output.
 */
template <typename R, typename Fn>
std::vector<R> parallel_map(int n, int workers, Fn fn) {
    std::vector<R> out(n);
    if (n == 0) return out;
    if (workers <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    workers = std::min(workers, n);
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < n; i += workers) out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace prenichols
