#include "lqsp/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "lqsp/errors.hpp"

namespace lqsp {

namespace {

// Kahan compensated accumulator for complex terms. Keeps the summation error
// at a few ulps regardless of term count, which the near-machine-precision
// consumers of eval() rely on.
struct CompensatedSum {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};

    void add(cplx term) {
        cplx y = term - comp;
        cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

constexpr double kTrimThreshold = 1e-300;

}  // namespace

LaurentPolynomial::LaurentPolynomial(int degree, std::vector<cplx> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0) {
        throw DomainError("laurent degree must be nonnegative, got " +
                          std::to_string(degree_));
    }
    size_t want = 2 * static_cast<size_t>(degree_) + 1;
    if (coeffs_.size() != want) {
        throw DomainError("laurent coefficient list has size " +
                          std::to_string(coeffs_.size()) + ", degree " +
                          std::to_string(degree_) + " needs " +
                          std::to_string(want));
    }
}

LaurentPolynomial LaurentPolynomial::constant(cplx c) {
    return LaurentPolynomial(0, {c});
}

LaurentPolynomial LaurentPolynomial::monomial(int k, cplx c) {
    int n = std::abs(k);
    std::vector<cplx> coeffs(2 * static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
    coeffs[static_cast<size_t>(k + n)] = c;
    return LaurentPolynomial(n, std::move(coeffs));
}

bool LaurentPolynomial::is_zero() const {
    for (const cplx& c : coeffs_) {
        if (c != cplx(0.0, 0.0)) return false;
    }
    return true;
}

cplx LaurentPolynomial::eval(double theta) const {
    // Fold into the cos/sin basis:
    //   p(e^{i t}) = c_0 + sum_{k>=1} (c_k + c_{-k}) cos kt + i (c_k - c_{-k}) sin kt
    // and sum with compensation. Each cos/sin call is accurate to a fraction
    // of an ulp, so total error tracks the coefficient mass, not the degree.
    CompensatedSum acc;
    acc.add(coeff(0));
    for (int k = 1; k <= degree_; ++k) {
        cplx ck = coeffs_[static_cast<size_t>(k + degree_)];
        cplx cmk = coeffs_[static_cast<size_t>(-k + degree_)];
        if (ck == cplx(0.0, 0.0) && cmk == cplx(0.0, 0.0)) continue;
        double angle = static_cast<double>(k) * theta;
        double c = std::cos(angle);
        double s = std::sin(angle);
        acc.add((ck + cmk) * c);
        acc.add((ck - cmk) * cplx(0.0, s));
    }
    return acc.sum;
}

LaurentPolynomial LaurentPolynomial::trimmed() const {
    int n = degree_;
    auto negligible = [&](int k) {
        cplx c = coeffs_[static_cast<size_t>(k + degree_)];
        return std::abs(c.real()) <= kTrimThreshold &&
               std::abs(c.imag()) <= kTrimThreshold;
    };
    while (n > 0 && negligible(n) && negligible(-n)) --n;
    std::vector<cplx> out(2 * static_cast<size_t>(n) + 1);
    for (int k = -n; k <= n; ++k) {
        out[static_cast<size_t>(k + n)] = coeff(k);
    }
    return LaurentPolynomial(n, std::move(out));
}

cplx eval_on_circle(const LaurentPolynomial& p, double theta) {
    return p.eval(theta);
}

LaurentPolynomial product(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    int n = p.degree() + q.degree();
    std::vector<cplx> out(2 * static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == cplx(0.0, 0.0)) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return LaurentPolynomial(n, std::move(out));
}

LaurentPolynomial star(const LaurentPolynomial& p) {
    int n = p.degree();
    std::vector<cplx> out(2 * static_cast<size_t>(n) + 1);
    for (int k = -n; k <= n; ++k) {
        out[static_cast<size_t>(k + n)] = std::conj(p.coeff(-k));
    }
    return LaurentPolynomial(n, std::move(out));
}

CirclePredicateReport classify(const LaurentPolynomial& p, double tol) {
    double dev_real = 0.0;
    double dev_rec = 0.0;
    double dev_anti = 0.0;
    int n = p.degree();
    for (int k = 0; k <= n; ++k) {
        cplx ck = p.coeff(k);
        cplx cmk = p.coeff(-k);
        dev_real = std::max(dev_real, std::abs(ck - std::conj(cmk)));
        dev_rec = std::max(dev_rec, std::abs(ck - cmk));
        dev_anti = std::max(dev_anti, std::abs(ck + cmk));
    }
    CirclePredicateReport report;
    report.is_real_on_circle = dev_real <= tol;
    report.is_reciprocal = dev_rec <= tol;
    report.is_anti_reciprocal = dev_anti <= tol;
    report.max_deviation = std::min({dev_real, dev_rec, dev_anti});
    return report;
}

LaurentPolynomial from_chebyshev(std::span<const double> kind1,
                                 std::span<const double> kind2sin) {
    if (!kind2sin.empty() && kind2sin[0] != 0.0) {
        throw DomainError("sin-basis coefficient of sin(0*theta) must be zero");
    }
    size_t terms = std::max(kind1.size(), kind2sin.size());
    int n = terms == 0 ? 0 : static_cast<int>(terms) - 1;
    std::vector<cplx> out(2 * static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
    if (!kind1.empty()) {
        out[static_cast<size_t>(n)] += cplx(kind1[0], 0.0);
    }
    for (int k = 1; k <= n; ++k) {
        double a = static_cast<size_t>(k) < kind1.size() ? kind1[static_cast<size_t>(k)] : 0.0;
        double b = static_cast<size_t>(k) < kind2sin.size() ? kind2sin[static_cast<size_t>(k)] : 0.0;
        // T_k -> (z^k + z^{-k})/2 and sin(k theta) -> (z^k - z^{-k})/(2i).
        cplx hi = cplx(a / 2.0, -b / 2.0);
        cplx lo = cplx(a / 2.0, b / 2.0);
        out[static_cast<size_t>(k + n)] += hi;
        out[static_cast<size_t>(-k + n)] += lo;
    }
    return LaurentPolynomial(n, std::move(out));
}

double linf_on_circle(const LaurentPolynomial& p, int grid_points) {
    int minimum = 4 * (p.degree() + 1);
    if (grid_points < minimum) {
        throw GridTooCoarseError("linf grid needs at least " +
                                 std::to_string(minimum) + " points for degree " +
                                 std::to_string(p.degree()) + ", got " +
                                 std::to_string(grid_points));
    }
    double best = 0.0;
    double step = 2.0 * M_PI / static_cast<double>(grid_points);
    for (int j = 0; j < grid_points; ++j) {
        best = std::max(best, std::abs(p.eval(step * static_cast<double>(j))));
    }
    return best;
}

namespace {

LaurentPolynomial combine(const LaurentPolynomial& p, const LaurentPolynomial& q,
                          cplx wp, cplx wq) {
    int n = std::max(p.degree(), q.degree());
    std::vector<cplx> out(2 * static_cast<size_t>(n) + 1);
    for (int k = -n; k <= n; ++k) {
        out[static_cast<size_t>(k + n)] = wp * p.coeff(k) + wq * q.coeff(k);
    }
    return LaurentPolynomial(n, std::move(out));
}

}  // namespace

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    return combine(p, q, cplx(1.0, 0.0), cplx(1.0, 0.0));
}

LaurentPolynomial subtract(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    return combine(p, q, cplx(1.0, 0.0), cplx(-1.0, 0.0));
}

LaurentPolynomial scale(const LaurentPolynomial& p, cplx factor) {
    int n = p.degree();
    std::vector<cplx> out(2 * static_cast<size_t>(n) + 1);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = factor * p.coeffs()[i];
    }
    return LaurentPolynomial(n, std::move(out));
}

}  // namespace lqsp
