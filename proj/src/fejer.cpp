#include "lqsp/fejer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "lqsp/errors.hpp"

namespace lqsp {

namespace {

// Compensated accumulation; the Newton residual floor depends on the
// autocorrelation being summed to a few ulps.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double term) {
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double FejerInstance::eval(double theta) const {
    // F(theta) = Re(f[0] + 2 sum_{l>=1} f[l] z^l) at z = e^{i theta}, by Horner.
    std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> acc(0.0, 0.0);
    for (size_t l = f.size(); l-- > 1;) {
        acc = (acc + f[l]) * z;
    }
    return f[0] + 2.0 * acc.real();
}

FejerInstance make_fejer_instance(std::vector<double> half_coeffs) {
    if (half_coeffs.empty()) {
        throw DomainError("fejer instance needs at least the constant coefficient");
    }
    for (double c : half_coeffs) {
        if (!std::isfinite(c)) {
            throw DomainError("fejer instance has a non-finite coefficient");
        }
    }
    if (!(half_coeffs[0] > 0.0)) {
        throw NegativeInstanceError(
            "mean of the instance is " + std::to_string(half_coeffs[0]) +
            ", a nonnegative nonzero instance has positive mean");
    }

    FejerInstance instance;
    instance.f = std::move(half_coeffs);

    int n = instance.degree();
    int grid = 8 * (n + 1);
    double min_value = instance.f[0];
    double step = 2.0 * M_PI / static_cast<double>(grid);
    for (int j = 0; j < grid; ++j) {
        min_value = std::min(min_value, instance.eval(step * static_cast<double>(j)));
    }

    double tol_neg = 1e-12 * instance.f[0];
    if (min_value < -tol_neg) {
        throw NegativeInstanceError("instance reaches " + std::to_string(min_value) +
                                    " on the witness grid");
    }
    if (min_value < tol_neg) {
        // Grazing zero: push the whole curve up a hair so the factorization
        // sees a strictly positive function.
        instance.lift = tol_neg;
        instance.f[0] += tol_neg;
    }
    return instance;
}

std::vector<double> autocorrelation(const std::vector<double>& g) {
    size_t n = g.size();
    std::vector<double> r(n, 0.0);
    for (size_t l = 0; l < n; ++l) {
        KahanSum acc;
        for (size_t m = 0; m + l < n; ++m) {
            acc.add(g[m] * g[m + l]);
        }
        r[l] = acc.sum;
    }
    return r;
}

Matrix wilson_jacobian(const std::vector<double>& g) {
    int n = static_cast<int>(g.size()) - 1;
    Matrix j(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        double* row = j.row(i);
        for (int c = 0; c <= n; ++c) {
            double v = 0.0;
            if (i + c <= n) v += g[static_cast<size_t>(i + c)];
            if (c >= i) v += g[static_cast<size_t>(c - i)];
            row[c] = v;
        }
    }
    return j;
}

int winding_number(const std::vector<double>& g) {
    int n = static_cast<int>(g.size()) - 1;
    int grid = 16 * (n + 1);
    double step = 2.0 * M_PI / static_cast<double>(grid);
    auto value = [&](double theta) {
        std::complex<double> z = std::polar(1.0, theta);
        std::complex<double> acc(0.0, 0.0);
        for (size_t l = g.size(); l-- > 0;) {
            acc = acc * z + g[l];
        }
        return acc;
    };
    double total = 0.0;
    std::complex<double> prev = value(0.0);
    for (int j = 1; j <= grid; ++j) {
        std::complex<double> cur = value(step * static_cast<double>(j));
        // Principal-value phase increment between consecutive samples.
        total += std::arg(cur * std::conj(prev));
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

std::vector<double> wilson_factorize(const FejerInstance& instance,
                                     const WilsonOptions& opts,
                                     WilsonReport& report) {
    const std::vector<double>& f = instance.f;
    int n = instance.degree();
    report = WilsonReport{};

    auto residual_of = [&](const std::vector<double>& r) {
        double worst = 0.0;
        for (size_t l = 0; l < f.size(); ++l) {
            worst = std::max(worst, std::abs(r[l] - f[l]));
        }
        return worst;
    };

    std::vector<double> g(static_cast<size_t>(n) + 1, 0.0);
    g[0] = std::sqrt(f[0]);
    std::vector<double> r = autocorrelation(g);
    double residual = residual_of(r);
    report.residual_history.push_back(residual);

    int increases = 0;
    for (int iter = 1; iter <= opts.max_iter && residual > opts.eps; ++iter) {
        Matrix j = wilson_jacobian(g);
        std::vector<double> rhs(static_cast<size_t>(n) + 1);
        for (size_t l = 0; l < rhs.size(); ++l) {
            rhs[l] = r[l] + f[l];
        }
        solve_linear_inplace(j, rhs);
        g = std::move(rhs);
        if (g[0] < 0.0) {
            for (double& v : g) v = -v;
        }

        r = autocorrelation(g);
        double next = residual_of(r);
        report.iterations = iter;
        report.residual_history.push_back(next);
        if (opts.observer) opts.observer(iter, next);

        increases = next > residual ? increases + 1 : 0;
        residual = next;
        if (!std::isfinite(next)) break;
        // Five increases in a row reads as divergence, stop burning time.
        if (increases >= 5) break;
    }

    report.residual_linf = residual;
    if (residual <= opts.eps) {
        report.winding = winding_number(g);
        report.converged = report.winding == 0;
    }
    return g;
}

}  // namespace lqsp
