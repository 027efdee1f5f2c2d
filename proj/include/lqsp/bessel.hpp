#pragma once

#include <vector>

namespace lqsp {

// Cylinder Bessel values by Miller's downward recurrence with on-the-fly
// rescaling, accurate to near machine precision across the supported range.
// Supported arguments: 0 <= order <= kMaxOrder and 0 <= x <= kMaxArgument;
// larger requests throw RangeUnsupportedError, malformed ones DomainError.

inline constexpr int kMaxOrder = 100000;
inline constexpr double kMaxArgument = 10000.0;

// J_k(x) for k = 0..max_order in one downward pass, normalized through
// J_0 + 2 sum_k J_{2k} = 1.
std::vector<double> bessel_j_all(int max_order, double x);

// e^{-x} I_k(x) for k = 0..max_order, normalized through
// e^x = I_0 + 2 sum_k I_k, which the scaling turns into a direct division.
std::vector<double> bessel_i_scaled_all(int max_order, double x);

double bessel_j(int order, double x);
double bessel_i_scaled(int order, double x);

}  // namespace lqsp
