#include "lqsp/accessibility.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "lqsp/bessel.hpp"
#include "lqsp/errors.hpp"
#include "lqsp/targets.hpp"

namespace lqsp {

std::vector<BigExp> t_series_monomial(const std::vector<double>& c, double alpha,
                                      double beta) {
    if (c.empty()) {
        throw DomainError("t_series_monomial: empty coefficient list");
    }
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<BigExp> acc(n + 1), prev(n + 1), cur(n + 1), nxt(n + 1);
    const BigExp a2 = BigExp::from(2.0 * alpha);
    const BigExp b2 = BigExp::from(2.0 * beta);

    prev[0] = BigExp::from(1.0);
    if (c[0] != 0.0) acc[0] = prev[0] * c[0];
    if (n >= 1) {
        cur[0] = BigExp::from(beta);
        cur[1] = BigExp::from(alpha);
        if (c[1] != 0.0) {
            acc[0] = acc[0] + cur[0] * c[1];
            acc[1] = acc[1] + cur[1] * c[1];
        }
    }
    // Three-term recurrence on zero-padded vectors; entries past the current
    // degree stay exactly zero, so the j loop can run the full width m.
    for (int m = 2; m <= n; ++m) {
        for (int j = 0; j <= m; ++j) {
            BigExp t = cur[j] * b2;
            if (j >= 1) t = t + cur[j - 1] * a2;
            nxt[j] = t - prev[j];
        }
        if (c[m] != 0.0) {
            for (int j = 0; j <= m; ++j) {
                acc[j] = acc[j] + nxt[j] * c[m];
            }
        }
        std::swap(prev, cur);
        std::swap(cur, nxt);
    }
    return acc;
}

std::vector<BigExp> threshold_ratio_monomial(int k, double c0, double c2) {
    if (k < 1) {
        throw DomainError("threshold_ratio_monomial: order must be positive");
    }
    // Everything is even in x, so vectors are packed at stride two: entry j
    // multiplies x^{2j}. The scalar recurrence for T_k(c0) runs alongside and
    // normalizes at the end, all in extended range since both sides dwarf
    // binary64 for the interesting orders.
    std::vector<BigExp> prev(k + 1), cur(k + 1), nxt(k + 1);
    const BigExp tc0 = BigExp::from(2.0 * c0);
    const BigExp tc2 = BigExp::from(2.0 * c2);
    prev[0] = BigExp::from(1.0);
    cur[0] = BigExp::from(c0);
    cur[1] = BigExp::from(c2);
    BigExp tprev = BigExp::from(1.0);
    BigExp tcur = BigExp::from(c0);
    for (int m = 2; m <= k; ++m) {
        for (int j = 0; j <= m; ++j) {
            BigExp t = cur[j] * tc0;
            if (j >= 1) t = t + cur[j - 1] * tc2;
            nxt[j] = t - prev[j];
        }
        std::swap(prev, cur);
        std::swap(cur, nxt);
        const BigExp tn = tcur * tc0 - tprev;
        tprev = tcur;
        tcur = tn;
    }
    for (int j = 0; j <= k; ++j) cur[j] = cur[j] / tcur;
    return cur;
}

std::vector<BigExp> convolve_bigexp(const std::vector<BigExp>& p,
                                    const std::vector<BigExp>& q) {
    if (p.empty() || q.empty()) {
        throw DomainError("convolve_bigexp: empty operand");
    }
    std::vector<BigExp> out(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        for (std::size_t j = 0; j < q.size(); ++j) {
            out[i + j] = out[i + j] + p[i] * q[j];
        }
    }
    return out;
}

void keep_parity(std::vector<BigExp>& coeffs, Parity parity) {
    if (parity == Parity::none) return;
    const std::size_t start = parity == Parity::even ? 1 : 0;
    for (std::size_t j = start; j < coeffs.size(); j += 2) {
        coeffs[j] = BigExp{};
    }
}

CoeffLogRange coeff_log_range(const std::vector<BigExp>& coeffs) {
    CoeffLogRange out;
    for (const BigExp& v : coeffs) {
        if (v.is_zero()) continue;
        const double lg = v.log10_abs();
        if (!out.any_nonzero) {
            out.max_log10 = lg;
            out.min_log10_nonzero = lg;
            out.any_nonzero = true;
        } else {
            out.max_log10 = std::max(out.max_log10, lg);
            out.min_log10_nonzero = std::min(out.min_log10_nonzero, lg);
        }
    }
    return out;
}

namespace {

// Monomial log-range of scale * [parity part of] sum c[m] T_m((x + shift)/2).
CoeffLogRange scaled_t_series_range(const std::vector<double>& c, double shift,
                                    double scale, Parity parity) {
    std::vector<BigExp> mono = t_series_monomial(c, 0.5, shift / 2.0);
    keep_parity(mono, parity);
    const BigExp f = BigExp::from(scale);
    for (BigExp& v : mono) v = v * f;
    return coeff_log_range(mono);
}

// The erf series needs scaled modified Bessel values at (2k)^2/2, so past the
// supported argument the survey runs at the largest supported sharpness
// instead. The coefficient range grows monotonically with sharpness (both the
// term count and the composed magnitudes increase), so the capped value is a
// lower bound and an overflow verdict from it is still certain.
double capped_sharpness(double k) {
    return std::min(k, std::sqrt(kMaxArgument / 2.0));
}

}  // namespace

CoeffLogRange sign_monomial_range(double a, double kappa_width, double eps) {
    if (!(a >= -1.0) || !(a <= 1.0)) {
        throw DomainError("sign_monomial_range: shift must lie in [-1, 1]");
    }
    const double k = capped_sharpness(sign_sharpness(kappa_width, eps));
    const int n = sign_erf_terms(k, eps);
    const std::vector<double> c = erf_chebyshev(2.0 * k, n);
    return scaled_t_series_range(c, -a, 0.5, a == 0.0 ? Parity::odd : Parity::none);
}

CoeffLogRange rect_monomial_range(double t, double delta, double eps) {
    if (!(t > 0.0) || !(delta > 0.0) || !(t + delta / 2.0 < 1.0)) {
        throw DomainError("rect_monomial_range: need t > 0, delta > 0, t + delta/2 < 1");
    }
    const double k = capped_sharpness(sign_sharpness(delta / 2.0, eps));
    const int n = sign_erf_terms(k, eps);
    const std::vector<double> c = erf_chebyshev(2.0 * k, n);
    return scaled_t_series_range(c, t + delta / 4.0, 0.5, Parity::even);
}

CoeffLogRange matrix_inversion_monomial_range(double kappa, double eps) {
    const std::vector<double> tails = inverse_odd_tail_sums(kappa, eps);
    const int j0 = static_cast<int>(tails.size()) - 1;
    std::vector<double> cinv(2 * j0 + 2, 0.0);
    for (int j = 0; j <= j0; ++j) {
        cinv[2 * j + 1] = 4.0 * (j % 2 == 0 ? 1.0 : -1.0) * tails[j];
    }
    const std::vector<BigExp> pinv = t_series_monomial(cinv, 1.0, 0.0);

    const double eps_rect = std::min(eps, kappa / (2.0 * j0));
    const double a = 3.0 / (4.0 * kappa);  // window center t + delta/4
    const double k = capped_sharpness(sign_sharpness(1.0 / (2.0 * kappa), eps_rect));
    const int n = sign_erf_terms(k, eps_rect);
    std::vector<BigExp> rect =
        t_series_monomial(erf_chebyshev(2.0 * k, n), 0.5, a / 2.0);
    keep_parity(rect, Parity::even);
    for (BigExp& v : rect) v.m = -v.m;
    rect[0] = rect[0] + BigExp::from(1.0);

    std::vector<BigExp> prod = convolve_bigexp(pinv, rect);
    keep_parity(prod, Parity::odd);
    const BigExp f = BigExp::from(1.0 / (2.0 * kappa));
    for (BigExp& v : prod) v = v * f;
    return coeff_log_range(prod);
}

std::vector<AccessibilityCell> accessibility_map(
    const std::string& family, const std::vector<double>& params,
    const std::vector<int>& log10_inv_eps) {
    if (family != "threshold" && family != "rect") {
        throw DomainError("accessibility_map: family must be threshold or rect");
    }
    std::vector<AccessibilityCell> out;
    out.reserve(params.size() * log10_inv_eps.size());
    for (const double param : params) {
        for (const int lie : log10_inv_eps) {
            if (lie < 1) {
                throw DomainError("accessibility_map: log10(1/eps) must be >= 1");
            }
            const double eps = std::pow(10.0, -lie);
            CoeffLogRange range;
            if (family == "threshold") {
                const int k = threshold_order(param, eps);
                const double c0 = -(1.0 + param * param) / (1.0 - param * param);
                const double c2 = 2.0 / (1.0 - param * param);
                std::vector<BigExp> mono = threshold_ratio_monomial(k, c0, c2);
                const BigExp half = BigExp::from(0.5);
                for (BigExp& v : mono) v = v * half;
                range = coeff_log_range(mono);
            } else {
                range = rect_monomial_range(0.5, param, eps);
            }
            AccessibilityCell cell;
            cell.param = param;
            cell.log10_inv_eps = lie;
            cell.max_log10_coeff = range.max_log10;
            cell.min_log10_nonzero_coeff = range.min_log10_nonzero;
            cell.overflow = range.max_log10 > kOverflowLog10;
            cell.dynamic_range_digits = range.max_log10 - range.min_log10_nonzero;
            out.push_back(cell);
        }
    }
    return out;
}

}  // namespace lqsp
