#include "lqsp/format.hpp"

#include <charconv>

namespace lqsp {

std::string format_double(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace lqsp
