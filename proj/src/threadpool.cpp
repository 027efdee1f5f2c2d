#include "lqsp/threadpool.hpp"

#include <exception>
#include <thread>
#include <vector>

namespace lqsp {

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    std::size_t workers = threads > 1 ? static_cast<std::size_t>(threads) : 1;
    if (workers > count) workers = count;
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }

    // Contiguous blocks, remainder spread over the first blocks. The first
    // exception from any worker is rethrown after all of them join.
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::size_t base = count / workers;
    std::size_t extra = count % workers;
    std::size_t begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t len = base + (w < extra ? 1 : 0);
        std::size_t end = begin + len;
        pool.emplace_back([&body, &errors, w, begin, end]() {
            try {
                for (std::size_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace lqsp
