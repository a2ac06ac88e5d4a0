#include "expsumlab/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace esl {

void for_each_chunk(u64 total, u64 chunk_size, unsigned threads,
                    const std::function<void(std::size_t, u64, u64)>& fn) {
    if (chunk_size == 0) throw std::invalid_argument("for_each_chunk: chunk_size must be positive");
    const std::size_t n_chunks = chunk_count(total, chunk_size);
    auto run_chunk = [&](std::size_t c) {
        const u64 lo = u64(c) * chunk_size;
        const u64 hi = std::min(total, lo + chunk_size);
        fn(c, lo, hi);
    };
    if (threads <= 1 || n_chunks <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            try {
                run_chunk(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    const unsigned n_workers = unsigned(std::min<std::size_t>(threads, n_chunks));
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace esl
