#pragma once

#include <string>

namespace lqsp {

// Shortest decimal string that parses back to exactly the same binary64
// value. Used for every number we serialize, so files are reproducible
// bit-for-bit across runs and platforms.
std::string format_double(double x);

}  // namespace lqsp
