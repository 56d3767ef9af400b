#include "charcone/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "charcone/error.hpp"

namespace charcone {

namespace {

std::atomic<int> g_threads{0};

int env_threads() {
    const char* s = std::getenv("CHARCONE_THREADS");
    if (s == nullptr || *s == '\0') return 0;
    try {
        const int v = std::stoi(s);
        return v > 0 ? v : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

}  // namespace

int thread_count() {
    if (const int t = g_threads.load(); t > 0) return t;
    if (const int e = env_threads(); e > 0) return e;
    return std::max(1u, std::thread::hardware_concurrency());
}

void set_thread_count(int threads) {
    if (threads < 0) throw DomainError("thread count must be >= 0");
    g_threads.store(threads);
}

void parallel_for(std::size_t tasks, const std::function<void(std::size_t)>& body) {
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), tasks);
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < tasks; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace charcone
