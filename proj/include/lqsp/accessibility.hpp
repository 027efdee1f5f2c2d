#pragma once

#include <string>
#include <vector>

#include "lqsp/bigexp.hpp"

namespace lqsp {

// Largest finite magnitude expressible in binary64, as log10. Anything above
// cannot be materialized as an ordinary double coefficient.
constexpr double kOverflowLog10 = 308.2547155599167;

enum class Parity { none, even, odd };

// Monomial-basis coefficients of sum_m c[m] * T_m(alpha*x + beta), computed
// in extended-range arithmetic so astronomically large entries stay exact.
std::vector<BigExp> t_series_monomial(const std::vector<double>& c, double alpha,
                                      double beta);

// Monomial coefficients of T_k(c0 + c2*x^2) / T_k(c0), packed at stride two:
// entry j multiplies x^{2j}.
std::vector<BigExp> threshold_ratio_monomial(int k, double c0, double c2);

std::vector<BigExp> convolve_bigexp(const std::vector<BigExp>& p,
                                    const std::vector<BigExp>& q);

// Zeroes out the entries of the opposite parity (index parity in the packed
// vector). Parity::none keeps everything.
void keep_parity(std::vector<BigExp>& coeffs, Parity parity);

struct CoeffLogRange {
    double max_log10 = 0.0;
    double min_log10_nonzero = 0.0;
    bool any_nonzero = false;
};

CoeffLogRange coeff_log_range(const std::vector<BigExp>& coeffs);

// One point of the coefficient-magnitude survey: for the target at (param,
// eps = 10^-log10_inv_eps), the extreme monomial coefficient sizes of the
// subnormalized polynomial and whether it fits binary64 at all.
struct AccessibilityCell {
    double param = 0.0;
    int log10_inv_eps = 0;
    double max_log10_coeff = 0.0;
    double min_log10_nonzero_coeff = 0.0;
    bool overflow = false;
    double dynamic_range_digits = 0.0;
};

// Surveys family "threshold" (param = gap delta) or "rect" (param = transition
// width delta, half-width t fixed at 0.5) over the cross product of params and
// log10_inv_eps. Runs entirely in extended-range arithmetic, so cells far past
// binary64 range are still reported exactly.
std::vector<AccessibilityCell> accessibility_map(
    const std::string& family, const std::vector<double>& params,
    const std::vector<int>& log10_inv_eps);

// Log-range of the subnormalized monomial coefficient list a family builder
// would materialize; the overflow precheck inside the builders.
CoeffLogRange sign_monomial_range(double a, double kappa_width, double eps);
CoeffLogRange rect_monomial_range(double t, double delta, double eps);
CoeffLogRange matrix_inversion_monomial_range(double kappa, double eps);

}  // namespace lqsp
