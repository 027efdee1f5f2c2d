#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "lqsp/accessibility.hpp"
#include "lqsp/errors.hpp"
#include "lqsp/targets.hpp"

namespace lqsp {

namespace {

constexpr std::span<const double> kNoSeries{};

// Product in the Chebyshev basis via T_i T_j = (T_{i+j} + T_{|i-j|}) / 2.
std::vector<double> chebyshev_multiply(const std::vector<double>& u,
                                       const std::vector<double>& v) {
    std::vector<double> w(u.size() + v.size() - 1, 0.0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0.0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            const double half = 0.5 * u[i] * v[j];
            w[i + j] += half;
            w[i > j ? i - j : j - i] += half;
        }
    }
    return w;
}

std::vector<double> inverse_chebyshev(const std::vector<double>& tail_sums) {
    const int j0 = static_cast<int>(tail_sums.size()) - 1;
    std::vector<double> cx(2 * j0 + 2, 0.0);
    for (int j = 0; j <= j0; ++j) {
        cx[2 * j + 1] = 4.0 * (j % 2 == 0 ? 1.0 : -1.0) * tail_sums[j];
    }
    return cx;
}

// Scales to the nominal 1/(2 kappa) subnormalization, then shrinks further if
// the sampled sup still grazes 1 (the truncated series has an interior hump
// that outgrows 2 kappa once kappa/eps is large enough). Returns the factor
// actually applied to the ideal unit-sup target.
double subnormalize(std::vector<double>& cx, double kappa) {
    for (double& v : cx) v /= 2.0 * kappa;
    return 1.0 / (2.0 * kappa);
}

LaurentPolynomial clamp_sup(LaurentPolynomial poly, double& subnorm) {
    const int n = poly.degree();
    const double sup = linf_on_circle(poly, 8 * (2 * n + 1));
    if (sup > 0.999) {
        const double shrink = 0.999 / sup;
        subnorm *= shrink;
        return scale(poly, cplx(shrink, 0.0));
    }
    return poly;
}

}  // namespace

std::vector<double> inverse_odd_tail_sums(double kappa, double eps) {
    const int b = inverse_series_length(kappa, eps);  // validates both arguments
    const int j0 = inverse_term_cutoff(kappa, eps);

    // S_j sums the upper tail of the centered binomial(2b, 1/2) weights,
    // C(2b, b+i)/4^b for i = j+1..b. One pass from the small end builds every
    // tail: right after adding term i the accumulator equals S_{i-1}.
    const double lg_total = std::lgamma(2.0 * b + 1.0);
    const double ln2 = std::log(2.0);
    std::vector<double> s(j0 + 1, 0.0);
    double acc = 0.0;
    double comp = 0.0;
    for (int i = b; i >= 1; --i) {
        const double lt = lg_total - std::lgamma(b + i + 1.0) -
                          std::lgamma(b - i + 1.0) - 2.0 * b * ln2;
        const double y = std::exp(lt) - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
        if (i - 1 <= j0) s[i - 1] = acc;
    }
    return s;
}

TargetPair build_inverse(double kappa, double eps) {
    std::vector<double> cx = inverse_chebyshev(inverse_odd_tail_sums(kappa, eps));
    double subnorm = subnormalize(cx, kappa);
    LaurentPolynomial bpoly = clamp_sup(from_chebyshev(cx, kNoSeries), subnorm);

    TargetPair pair{LaurentPolynomial::zero(), std::move(bpoly), {}};
    pair.meta.family = "inverse";
    pair.meta.kappa = kappa;
    pair.meta.eps_approx = eps;
    pair.meta.subnormalization = subnorm;

    const TargetCheck chk = check_target_pair(pair);
    if (!chk.a_ok || !chk.b_ok || !chk.within_disk) {
        throw DomainError("build_inverse: constructed pair failed its invariants");
    }
    return pair;
}

TargetPair build_matrix_inversion(double kappa, double eps) {
    const CoeffLogRange range = matrix_inversion_monomial_range(kappa, eps);
    if (range.max_log10 > kOverflowLog10) {
        throw CoefficientOverflowError(
            "build_matrix_inversion: monomial coefficients span " +
                std::to_string(range.max_log10) + " decades, beyond binary64",
            range.max_log10);
    }

    const std::vector<double> tails = inverse_odd_tail_sums(kappa, eps);
    const int j0 = static_cast<int>(tails.size()) - 1;
    const double eps_rect = std::min(eps, kappa / (2.0 * j0));

    // Multiply the odd inverse series by (1 - rect window) so the polynomial
    // dies off inside |x| < 1/kappa instead of chasing the pole.
    std::vector<double> window = rect_chebyshev(1.0 / (2.0 * kappa), 1.0 / kappa, eps_rect);
    window[0] = 1.0 - window[0];
    for (std::size_t m = 1; m < window.size(); ++m) window[m] = -window[m];

    std::vector<double> cx = chebyshev_multiply(inverse_chebyshev(tails), window);
    // Odd times even is odd; even residue is cross-term round-off.
    for (std::size_t m = 0; m < cx.size(); m += 2) cx[m] = 0.0;

    double subnorm = subnormalize(cx, kappa);
    LaurentPolynomial bpoly = clamp_sup(from_chebyshev(cx, kNoSeries), subnorm);

    TargetPair pair{LaurentPolynomial::zero(), std::move(bpoly), {}};
    pair.meta.family = "matrix_inversion";
    pair.meta.kappa = kappa;
    pair.meta.eps_approx = eps;
    pair.meta.t = 1.0 / (2.0 * kappa);
    pair.meta.delta = 1.0 / kappa;
    pair.meta.subnormalization = subnorm;

    const TargetCheck chk = check_target_pair(pair);
    if (!chk.a_ok || !chk.b_ok || !chk.within_disk) {
        throw DomainError("build_matrix_inversion: constructed pair failed its invariants");
    }
    return pair;
}

}  // namespace lqsp
