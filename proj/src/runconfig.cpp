#include "lqsp/runconfig.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace lqsp {

int resolve_threads(const RunConfig& cfg) {
    int budget = cfg.threads;
    if (const char* env = std::getenv("QSP_THREADS")) {
        int parsed = 0;
        auto [ptr, ec] =
            std::from_chars(env, env + std::strlen(env), parsed);
        if (ec == std::errc() && *ptr == '\0' && parsed > 0) {
            budget = parsed;
        }
    }
    if (budget <= 0) {
        budget = static_cast<int>(std::thread::hardware_concurrency());
    }
    return budget > 0 ? budget : 1;
}

}  // namespace lqsp
