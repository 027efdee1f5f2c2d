#include <cmath>
#include <vector>

#include "lqsp/accessibility.hpp"
#include "lqsp/errors.hpp"
#include "lqsp/targets.hpp"

namespace lqsp {

namespace {

constexpr std::span<const double> kNoSeries{};

// log(cosh(t)) for t >= 0 without overflowing cosh itself.
double logcosh(double t) {
    return t + std::log1p(std::exp(-2.0 * t)) - std::log(2.0);
}

}  // namespace

ThresholdTarget build_threshold(double delta, double eps) {
    const int k = threshold_order(delta, eps);  // validates both arguments

    // The approximant is T_k(u(x)) / T_k(u(0)) with u mapping [delta, 1] into
    // [-1, 1] and [0, delta) below -1, where T_k grows like cosh. All three
    // u-regimes are evaluated through logs so the ratio never overflows even
    // though numerator and denominator separately would.
    const double c0 = -(1.0 + delta * delta) / (1.0 - delta * delta);
    const double c2 = 2.0 / (1.0 - delta * delta);
    const double alpha0 = std::acosh(-c0);
    const double lc0 = logcosh(k * alpha0);

    auto evaluator = [k, c0, c2, lc0](double x) {
        const double u = c0 + c2 * x * x;
        const double sgn = k % 2 == 0 ? 1.0 : -1.0;
        if (u < -1.0) {
            // Same expression as lc0 at x = 0, so evaluator(0) == 1 exactly.
            return std::exp(logcosh(k * std::acosh(-u)) - lc0);
        }
        if (u <= 1.0) {
            return sgn * std::cos(k * std::acos(u)) * std::exp(-lc0);
        }
        return sgn * std::exp(logcosh(k * std::acosh(u)) - lc0);
    };

    // Chebyshev coefficients by interpolation at 2k+1 nodes, exact for the
    // degree-2k polynomial. Oddness of the node weights is not left to
    // round-off: the polynomial is even, so odd orders are pinned to zero.
    const int nodes = 2 * k + 1;
    std::vector<double> values(nodes);
    for (int i = 0; i < nodes; ++i) {
        values[i] = evaluator(std::cos(M_PI * (i + 0.5) / nodes));
    }
    std::vector<double> cheb(2 * k + 1, 0.0);
    for (int m = 0; m <= 2 * k; m += 2) {
        double acc = 0.0;
        double comp = 0.0;
        for (int i = 0; i < nodes; ++i) {
            const double term = values[i] * std::cos(M_PI * m * (i + 0.5) / nodes);
            const double y = term - comp;
            const double t = acc + y;
            comp = (t - acc) - y;
            acc = t;
        }
        cheb[m] = (m == 0 ? 1.0 : 2.0) * acc / nodes;
    }

    const CoeffLogRange range = coeff_log_range(threshold_ratio_monomial(k, c0, c2));

    ThresholdTarget out;
    out.evaluator = evaluator;
    out.chebyshev = std::move(cheb);
    out.k = k;
    out.overflow = range.any_nonzero && range.max_log10 > kOverflowLog10;
    return out;
}

TargetPair threshold_pair(double delta, double eps) {
    const ThresholdTarget target = build_threshold(delta, eps);
    std::vector<double> cx = target.chebyshev;
    for (double& v : cx) v *= 0.5;

    TargetPair pair{from_chebyshev(cx, kNoSeries), LaurentPolynomial::zero(), {}};
    pair.meta.family = "threshold";
    pair.meta.delta = delta;
    pair.meta.eps_approx = eps;
    pair.meta.subnormalization = 0.5;

    const TargetCheck chk = check_target_pair(pair);
    if (!chk.a_ok || !chk.b_ok || !chk.within_disk) {
        throw DomainError("threshold_pair: constructed pair failed its invariants");
    }
    return pair;
}

}  // namespace lqsp
