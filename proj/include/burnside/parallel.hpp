// Index-parallel helpers whose results never depend on the thread count.
#ifndef BURNSIDE_PARALLEL_HPP
#define BURNSIDE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace burnside {

/// Calls body(i) for every i < count, spreading work across `threads`
/// workers. The first exception thrown (lowest index wins) is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t err_index = count;
    std::exception_ptr err;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < err_index) {
                    err_index = i;
                    err = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

/// Smallest i < count with pred(i), skipping indices above the current best.
template <class Pred>
std::optional<std::size_t> first_index(std::size_t count, unsigned threads, Pred&& pred) {
    std::atomic<std::size_t> best{count};
    parallel_for(count, threads, [&](std::size_t i) {
        if (i > best.load()) return;
        if (!pred(i)) return;
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
    });
    if (best.load() == count) return std::nullopt;
    return best.load();
}

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace burnside

#endif
