#include "lqsp/complete.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "lqsp/errors.hpp"

namespace lqsp {

namespace {

struct PairSample {
    double sup_square = 0.0;      // max of A^2 + B^2 over the grid
    double deficiency_sup = 0.0;  // max of |1 - A^2 - B^2| over the grid
};

PairSample sample_pair(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    int n = std::max(a.degree(), b.degree());
    int grid = 8 * (2 * n + 1);
    PairSample s;
    for (int i = 0; i < grid; ++i) {
        double theta = 2.0 * M_PI * i / grid;
        double av = a.eval(theta).real();
        double bv = b.eval(theta).real();
        double m2 = av * av + bv * bv;
        s.sup_square = std::max(s.sup_square, m2);
        s.deficiency_sup = std::max(s.deficiency_sup, std::abs(1.0 - m2));
    }
    return s;
}

void require_classes(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    CirclePredicateReport ca = classify(a);
    if (!ca.is_real_on_circle || !ca.is_reciprocal) {
        throw DomainError("completion needs A real on the circle and reciprocal");
    }
    CirclePredicateReport cb = classify(b);
    if (!cb.is_real_on_circle || (!cb.is_reciprocal && !cb.is_anti_reciprocal)) {
        throw DomainError(
            "completion needs B real on the circle with a definite reciprocity class");
    }
}

void require_inside_disk(const PairSample& s) {
    if (s.sup_square > 1.0 + 1e-12) {
        throw NotCompletableError("sampled A^2 + B^2 reaches " +
                                  std::to_string(s.sup_square) +
                                  "; the pair has no unitary completion");
    }
}

}  // namespace

FejerInstance deficiency_polynomial(const LaurentPolynomial& a,
                                    const LaurentPolynomial& b) {
    require_classes(a, b);
    require_inside_disk(sample_pair(a, b));

    LaurentPolynomial def =
        subtract(LaurentPolynomial::constant(cplx(1.0, 0.0)),
                 add(product(a, a), product(b, b)));

    // The two halves agree up to summation order; averaging makes the stored
    // list exactly symmetric.
    int n = def.degree();
    std::vector<double> f(static_cast<size_t>(n) + 1, 0.0);
    f[0] = def.coeff(0).real();
    double largest = std::abs(f[0]);
    for (int l = 1; l <= n; ++l) {
        f[static_cast<size_t>(l)] = 0.5 * (def.coeff(l).real() + def.coeff(-l).real());
        largest = std::max(largest, std::abs(f[static_cast<size_t>(l)]));
    }
    if (largest == 0.0) {
        // Exactly unitary input. The zero instance has no spectral factor and
        // would fail validation, so hand it back as-is; complete() never
        // factorizes it.
        FejerInstance degenerate;
        degenerate.f = std::move(f);
        return degenerate;
    }
    return make_fejer_instance(std::move(f));
}

TargetPair handle_zero_component(const TargetPair& pair, double eps) {
    bool a_zero = pair.a.trimmed().is_zero();
    bool b_zero = pair.b.trimmed().is_zero();
    if (a_zero == b_zero) {
        throw DomainError("zero-component padding needs exactly one zero member");
    }
    const LaurentPolynomial& live = b_zero ? pair.a : pair.b;
    int n = live.trimmed().degree();
    if (n == 0) {
        throw DomainError("cannot pad a pair whose only member is constant");
    }

    double pad = std::max(1e-13, eps);
    int m = n - 1;
    std::vector<cplx> coeffs(static_cast<size_t>(2 * m) + 1, cplx(0.0, 0.0));
    if (b_zero) {
        // Stand-in for B: anti-reciprocal, imaginary coefficients, no constant
        // term, indices of parity opposite to n.
        for (int k = (m % 2 == 0) ? 2 : 1; k <= m; k += 2) {
            coeffs[static_cast<size_t>(m + k)] = cplx(0.0, -pad);
            coeffs[static_cast<size_t>(m - k)] = cplx(0.0, pad);
        }
    } else {
        // Stand-in for A: reciprocal, real coefficients, same parity rule.
        for (int k = m % 2; k <= m; k += 2) {
            coeffs[static_cast<size_t>(m + k)] = cplx(pad, 0.0);
            coeffs[static_cast<size_t>(m - k)] = cplx(pad, 0.0);
        }
    }

    TargetPair out = pair;
    (b_zero ? out.b : out.a) = LaurentPolynomial(m, std::move(coeffs));
    if (sample_pair(out.a, out.b).sup_square > 1.0 + 1e-12) {
        throw NotCompletableError("padding the zero member pushed A^2 + B^2 above one");
    }
    return out;
}

CompletedQuadruple complete(const TargetPair& pair, double eps_fejer, int max_iter) {
    if (!(eps_fejer > 0.0) || !std::isfinite(eps_fejer)) {
        throw DomainError("eps_fejer must be positive and finite");
    }
    if (max_iter < 1) {
        throw DomainError("max_iter must be at least one");
    }
    require_classes(pair.a, pair.b);

    PairSample before = sample_pair(pair.a, pair.b);
    require_inside_disk(before);

    CompletedQuadruple out;
    out.a = pair.a;
    out.b = pair.b;

    if (before.deficiency_sup <= 1e-12) {
        // The pair is already unitary to working precision and the zero
        // deficiency has no spectral factor, so C = D = 0 completes it.
        out.c = LaurentPolynomial::zero();
        out.d = LaurentPolynomial::zero();
        out.report.wilson.converged = true;
        out.report.unitarity_residual = before.deficiency_sup;
        out.report.eps_coeff = before.deficiency_sup;
        return out;
    }

    bool a_zero = pair.a.trimmed().is_zero();
    bool b_zero = pair.b.trimmed().is_zero();
    if (a_zero != b_zero) {
        TargetPair padded = handle_zero_component(pair, eps_fejer);
        out.a = padded.a;
        out.b = padded.b;
    }

    FejerInstance instance = deficiency_polynomial(out.a, out.b);

    WilsonOptions opts;
    opts.eps = eps_fejer;
    opts.max_iter = max_iter;
    auto start = std::chrono::steady_clock::now();
    std::vector<double> gamma = wilson_factorize(instance, opts, out.report.wilson);
    auto stop = std::chrono::steady_clock::now();
    out.report.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    if (!out.report.wilson.converged) {
        throw NoConvergenceError(
            "deficiency factorization stalled at residual " +
            std::to_string(out.report.wilson.residual_linf) + " after " +
            std::to_string(out.report.wilson.iterations) + " iterations");
    }

    // On the circle C + iD equals the spectral factor, so C^2 + D^2 gives
    // back the deficiency and the quadruple is unitary.
    int ng = static_cast<int>(gamma.size()) - 1;
    std::vector<cplx> cc(static_cast<size_t>(2 * ng) + 1, cplx(0.0, 0.0));
    std::vector<cplx> dc(static_cast<size_t>(2 * ng) + 1, cplx(0.0, 0.0));
    cc[static_cast<size_t>(ng)] = cplx(gamma[0], 0.0);
    for (int l = 1; l <= ng; ++l) {
        double half = 0.5 * gamma[static_cast<size_t>(l)];
        cc[static_cast<size_t>(ng + l)] = cplx(half, 0.0);
        cc[static_cast<size_t>(ng - l)] = cplx(half, 0.0);
        dc[static_cast<size_t>(ng + l)] = cplx(0.0, -half);
        dc[static_cast<size_t>(ng - l)] = cplx(0.0, half);
    }
    out.c = LaurentPolynomial(ng, std::move(cc));
    out.d = LaurentPolynomial(ng, std::move(dc));

    int nmax = std::max(std::max(out.a.degree(), out.b.degree()), ng);
    int grid = 8 * (2 * nmax + 1);
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
        double theta = 2.0 * M_PI * i / grid;
        double av = out.a.eval(theta).real();
        double bv = out.b.eval(theta).real();
        double cv = out.c.eval(theta).real();
        double dv = out.d.eval(theta).real();
        worst = std::max(worst,
                         std::abs(av * av + bv * bv + cv * cv + dv * dv - 1.0));
    }
    out.report.unitarity_residual = worst;
    out.report.eps_coeff = worst;
    return out;
}

}  // namespace lqsp
