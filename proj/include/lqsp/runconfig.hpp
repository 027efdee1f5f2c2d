#pragma once

#include <cstdint>
#include <string>

namespace lqsp {

// Knobs shared by every pipeline stage, serialized alongside each output so a
// result can be reproduced from the artifact alone. grid_points 0 means the
// degree-dependent default 8*(2n+1); threads 0 means all available cores.
struct RunConfig {
    double eps_fejer = 1e-14;
    int max_iter = 200;
    int grid_points = 0;
    std::string basis = "plus";
    int threads = 0;
    std::int64_t seed = 0;
};

// Thread budget after applying the QSP_THREADS environment override and the
// hardware default. Always at least one.
int resolve_threads(const RunConfig& cfg);

}  // namespace lqsp
