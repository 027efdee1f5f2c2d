#include <cmath>
#include <cstddef>
#include <vector>

#include "lqsp/accessibility.hpp"
#include "lqsp/bessel.hpp"
#include "lqsp/errors.hpp"
#include "lqsp/targets.hpp"

namespace lqsp {

namespace {

constexpr std::span<const double> kNoSeries{};

// Chebyshev-in-x coefficients of q((x + shift)/2) where q = sum c[m] T_m.
// Interpolation through deg(q)+1 Chebyshev nodes reproduces a polynomial of
// that degree exactly, so this is a basis change, not an approximation.
std::vector<double> rebase_half_argument(const std::vector<double>& c, double shift) {
    const int n = static_cast<int>(c.size()) - 1;
    const int nodes = n + 1;
    std::vector<double> values(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double x = std::cos(M_PI * (i + 0.5) / nodes);
        values[i] = chebyshev_eval(c, (x + shift) / 2.0);
    }
    std::vector<double> out(n + 1, 0.0);
    for (int m = 0; m <= n; ++m) {
        double acc = 0.0;
        double comp = 0.0;
        for (int i = 0; i < nodes; ++i) {
            const double term = values[i] * std::cos(M_PI * m * (i + 0.5) / nodes);
            const double y = term - comp;
            const double t = acc + y;
            comp = (t - acc) - y;
            acc = t;
        }
        out[m] = (m == 0 ? 1.0 : 2.0) * acc / nodes;
    }
    return out;
}

void require_smoothing_eps(double eps, const char* who) {
    const double cap = 2.0 * std::sqrt(2.0 / (std::exp(1.0) * M_PI));
    if (!(eps > 0.0) || !(eps < cap)) {
        throw DomainError(std::string(who) + ": eps must lie in (0, 2*sqrt(2/(e*pi)))");
    }
}

void require_invariants(const TargetPair& pair, const char* who) {
    const TargetCheck chk = check_target_pair(pair);
    if (!chk.a_ok || !chk.b_ok || !chk.within_disk) {
        throw DomainError(std::string(who) + ": constructed pair failed its invariants");
    }
}

}  // namespace

std::vector<double> erf_chebyshev(double k, int n) {
    if (!(k > 0.0)) {
        throw DomainError("erf_chebyshev: sharpness must be positive");
    }
    if (n < 1 || n % 2 == 0) {
        throw DomainError("erf_chebyshev: term count must be odd and positive");
    }
    // Odd-order expansion of erf(k x); the e^{-k^2/2} prefactor is exactly the
    // scaling baked into bessel_i_scaled, so no overflow-prone factor appears.
    const int jtop = (n - 1) / 2;
    const std::vector<double> iv = bessel_i_scaled_all(jtop, k * k / 2.0);
    const double pref = k * M_2_SQRTPI;  // 2k/sqrt(pi)
    std::vector<double> c(n + 1, 0.0);
    for (int j = 0; j + 1 <= jtop; ++j) {
        const double sgn = j % 2 == 0 ? 1.0 : -1.0;
        c[2 * j + 1] = pref * sgn * (iv[j] + iv[j + 1]) / (2 * j + 1);
    }
    c[n] = pref * (jtop % 2 == 0 ? 1.0 : -1.0) * iv[jtop] / n;
    return c;
}

double sign_sharpness(double kappa_width, double eps) {
    if (!(kappa_width > 0.0)) {
        throw DomainError("sign_sharpness: transition half-width must be positive");
    }
    const double arg = 8.0 / (M_PI * eps * eps);
    if (!(eps > 0.0) || !(arg > 1.0)) {
        throw DomainError("sign_sharpness: eps out of range");
    }
    return std::sqrt(2.0) / kappa_width * std::sqrt(std::log(arg));
}

int sign_erf_terms(double k, double eps) {
    return 2 * n_exp(2.0 * k * k, std::sqrt(M_PI) * eps / (16.0 * k)) + 1;
}

TargetPair build_sign(double a, double kappa_width, double eps) {
    if (!(a >= -1.0) || !(a <= 1.0)) {
        throw DomainError("build_sign: shift must lie in [-1, 1]");
    }
    require_smoothing_eps(eps, "build_sign");
    const double k = sign_sharpness(kappa_width, eps);

    const CoeffLogRange range = sign_monomial_range(a, kappa_width, eps);
    if (range.max_log10 > kOverflowLog10) {
        throw CoefficientOverflowError(
            "build_sign: monomial coefficients span " +
                std::to_string(range.max_log10) + " decades, beyond binary64",
            range.max_log10);
    }

    const int n = sign_erf_terms(k, eps);
    std::vector<double> cx = rebase_half_argument(erf_chebyshev(2.0 * k, n), -a);
    if (a == 0.0) {
        // The unshifted polynomial is exactly odd; even entries are rebase
        // round-off and are dropped rather than carried along.
        for (std::size_t m = 0; m < cx.size(); m += 2) cx[m] = 0.0;
    }
    for (double& v : cx) v *= 0.5;

    TargetPair pair{LaurentPolynomial::zero(), from_chebyshev(cx, kNoSeries), {}};
    pair.meta.family = "sign";
    pair.meta.a = a;
    pair.meta.kappa = kappa_width;
    pair.meta.eps_approx = eps;
    pair.meta.subnormalization = 0.5;
    require_invariants(pair, "build_sign");
    return pair;
}

std::vector<double> rect_chebyshev(double t, double delta, double eps) {
    if (!(t > 0.0) || !(delta > 0.0) || !(t + delta / 2.0 < 1.0)) {
        throw DomainError("rect_chebyshev: need t > 0, delta > 0, t + delta/2 < 1");
    }
    require_smoothing_eps(eps, "rect_chebyshev");
    const double k = sign_sharpness(delta / 2.0, eps);
    const int n = sign_erf_terms(k, eps);
    const double a = t + delta / 4.0;
    // The window is half the difference of two shifted sign polynomials; with
    // an odd base polynomial that is exactly the even part of the +a copy.
    std::vector<double> cx = rebase_half_argument(erf_chebyshev(2.0 * k, n), a);
    for (std::size_t m = 1; m < cx.size(); m += 2) cx[m] = 0.0;
    cx.pop_back();  // top order was odd, so it is gone now
    return cx;
}

TargetPair build_rect(double t, double delta, double eps) {
    const CoeffLogRange range = rect_monomial_range(t, delta, eps);
    if (range.max_log10 > kOverflowLog10) {
        throw CoefficientOverflowError(
            "build_rect: monomial coefficients span " +
                std::to_string(range.max_log10) + " decades, beyond binary64",
            range.max_log10);
    }
    std::vector<double> cx = rect_chebyshev(t, delta, eps);
    for (double& v : cx) v *= 0.5;

    TargetPair pair{from_chebyshev(cx, kNoSeries), LaurentPolynomial::zero(), {}};
    pair.meta.family = "rect";
    pair.meta.t = t;
    pair.meta.delta = delta;
    pair.meta.eps_approx = eps;
    pair.meta.subnormalization = 0.5;
    require_invariants(pair, "build_rect");
    return pair;
}

}  // namespace lqsp
