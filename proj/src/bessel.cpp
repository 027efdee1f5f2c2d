#include "lqsp/bessel.hpp"

#include <cmath>
#include <string>

#include "lqsp/errors.hpp"

namespace lqsp {

namespace {

constexpr double kRescaleAt = 1e250;
constexpr double kRescaleBy = 1e-250;

void check_range(int max_order, double x) {
    if (max_order < 0 || !std::isfinite(x) || x < 0.0) {
        throw DomainError("bessel needs order >= 0 and finite x >= 0");
    }
    if (max_order > kMaxOrder || x > kMaxArgument) {
        throw RangeUnsupportedError("bessel supports order <= " +
                                    std::to_string(kMaxOrder) + " and x <= " +
                                    std::to_string(kMaxArgument));
    }
}

// High enough start order that the contamination from the seeded second
// solution decays below machine precision by the time the recurrence reaches
// the requested orders, and that the normalization sum's truncated tail is
// equally negligible. Near the turning point (order ~ x) magnitudes fall off
// only like exp(-c * (order - x)^{3/2} / sqrt(x)), so the margin above x has
// to grow like x^{1/3}, not sqrt(x).
int miller_start(int max_order, double x) {
    double big = std::max(static_cast<double>(max_order), x);
    int start = std::max(max_order, static_cast<int>(std::ceil(x))) + 16 +
                2 * static_cast<int>(std::ceil(std::sqrt(big + 1.0))) +
                13 * static_cast<int>(std::ceil(std::cbrt(x + 1.0)));
    return start + (start % 2);
}

}  // namespace

std::vector<double> bessel_j_all(int max_order, double x) {
    check_range(max_order, x);
    std::vector<double> out(static_cast<size_t>(max_order) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }

    int start = miller_start(max_order, x);
    double above = 0.0;    // J_{k+1} up to a common scale
    double current = 1e-30;  // J_k, seeded at k = start
    double even_tail = 0.0;  // sum of J_k over even k >= 2
    for (int k = start; k >= 1; --k) {
        double below = (2.0 * static_cast<double>(k) / x) * current - above;
        above = current;
        current = below;
        int order = k - 1;
        if (order <= max_order) out[static_cast<size_t>(order)] = current;
        if (order > 0 && order % 2 == 0) even_tail += current;
        if (std::abs(current) > kRescaleAt) {
            current *= kRescaleBy;
            above *= kRescaleBy;
            even_tail *= kRescaleBy;
            for (double& v : out) v *= kRescaleBy;
        }
    }

    double norm = current + 2.0 * even_tail;
    for (double& v : out) v /= norm;
    return out;
}

std::vector<double> bessel_i_scaled_all(int max_order, double x) {
    check_range(max_order, x);
    std::vector<double> out(static_cast<size_t>(max_order) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }

    int start = miller_start(max_order, x);
    double above = 0.0;
    double current = 1e-30;
    double tail = 0.0;  // sum of I_k over k >= 1
    for (int k = start; k >= 1; --k) {
        double below = (2.0 * static_cast<double>(k) / x) * current + above;
        above = current;
        current = below;
        int order = k - 1;
        if (order <= max_order) out[static_cast<size_t>(order)] = current;
        if (order > 0) tail += current;
        if (std::abs(current) > kRescaleAt) {
            current *= kRescaleBy;
            above *= kRescaleBy;
            tail *= kRescaleBy;
            for (double& v : out) v *= kRescaleBy;
        }
    }

    // e^x = I_0 + 2 sum_{k>=1} I_k, so dividing by that sum lands directly on
    // the e^{-x}-scaled values.
    double norm = current + 2.0 * tail;
    for (double& v : out) v /= norm;
    return out;
}

double bessel_j(int order, double x) {
    return bessel_j_all(order, x).back();
}

double bessel_i_scaled(int order, double x) {
    return bessel_i_scaled_all(order, x).back();
}

}  // namespace lqsp
