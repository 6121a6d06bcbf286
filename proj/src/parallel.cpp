#include "balance/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace balance {

namespace {
std::atomic<std::size_t> g_thread_cap{0};
}

void set_max_threads(std::size_t threads) { g_thread_cap = threads; }

std::size_t max_threads() {
    std::size_t cap = g_thread_cap;
    if (cap != 0) return cap;
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
    if (count == 0) return;
    std::size_t workers = std::min(max_threads(), count);
    if (workers <= 1) {
        body(0, count);
        return;
    }
    // Several blocks per worker keeps stragglers short.
    std::size_t blocks = std::min(count, workers * 8);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= blocks) return;
            std::size_t begin = count * b / blocks;
            std::size_t end = count * (b + 1) / blocks;
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = blocks;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace balance
