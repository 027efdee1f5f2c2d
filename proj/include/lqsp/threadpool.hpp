#pragma once

#include <cstddef>
#include <functional>

namespace lqsp {

// Runs body(i) for i in [0, count) across at most threads workers, assigning
// each worker one contiguous index block. Writers must target slots indexed
// by i only; with that discipline the result of any reduction performed
// afterward in index order is independent of the thread count, which the
// command line layer promises of every output. threads <= 1 or tiny counts
// run inline.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace lqsp
