#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "lqsp/errors.hpp"
#include "lqsp/laurent.hpp"
#include "lqsp/targets.hpp"

using lqsp::cplx;
using lqsp::LaurentPolynomial;
using lqsp::TargetPair;

namespace {

// Combined value A(theta) + i B(theta) of a pair on the circle.
cplx pair_value(const TargetPair& pair, double theta) {
    return pair.a.eval(theta) + cplx(0.0, 1.0) * pair.b.eval(theta);
}

// The polynomial-in-x behind a pair member, recovered from the circle values:
// member(acos(x)) with the subnormalization divided back out.
double unscaled_value(const LaurentPolynomial& member, double subnorm, double x) {
    return member.eval(std::acos(x)).real() / subnorm;
}

}  // namespace

TEST_CASE("series cutoff spot values and growth") {
    CHECK(lqsp::truncation_hs(10.0, 1e-14) == 73);
    CHECK(lqsp::truncation_hs(20.0, 1e-14) == 87);
    CHECK(lqsp::truncation_hs(100.0, 1e-14) == 305);
    CHECK(lqsp::truncation_hs(1000.0, 1e-14) == 2751);

    int prev = 0;
    for (double tau : {0.5, 2.0, 8.0, 32.0, 128.0, 512.0}) {
        const int r = lqsp::truncation_hs(tau, 1e-12);
        CHECK(r > prev);
        prev = r;
    }
    CHECK_THROWS_AS(lqsp::truncation_hs(0.0, 1e-12), lqsp::DomainError);
    CHECK_THROWS_AS(lqsp::truncation_hs(1.0, 1.0), lqsp::DomainError);
}

TEST_CASE("hamiltonian simulation pair tracks the exponential") {
    for (double tau : {0.001, 1.0, 10.0}) {
        const TargetPair pair = lqsp::build_hamiltonian_sim(tau, 1e-14);
        double worst = 0.0;
        for (int j = 0; j < 4096; ++j) {
            const double theta = 2.0 * M_PI * j / 4096.0;
            const cplx want =
                0.5 * std::exp(cplx(0.0, tau * std::cos(theta)));
            worst = std::max(worst, std::abs(pair_value(pair, theta) - want));
        }
        CHECK(worst <= 5e-15);
    }
}

TEST_CASE("hamiltonian simulation pair at large evolution time") {
    const TargetPair pair = lqsp::build_hamiltonian_sim(1000.0, 1e-14);
    CHECK(pair.a.degree() == 2750);
    CHECK(pair.b.degree() == 2751);
    double worst = 0.0;
    for (int j = 0; j < 8192; ++j) {
        const double theta = 2.0 * M_PI * j / 8192.0;
        const cplx want = 0.5 * std::exp(cplx(0.0, 1000.0 * std::cos(theta)));
        worst = std::max(worst, std::abs(pair_value(pair, theta) - want));
    }
    // The reference itself carries ~tau*eps of argument-conditioning error,
    // so the budget is wider than the series tail bound alone.
    CHECK(worst <= 1e-12);
}

TEST_CASE("hamiltonian simulation pair structure") {
    const TargetPair pair = lqsp::build_hamiltonian_sim(10.0, 1e-14);
    const auto ca = lqsp::classify(pair.a);
    const auto cb = lqsp::classify(pair.b);
    CHECK(ca.is_real_on_circle);
    CHECK(ca.is_reciprocal);
    CHECK(cb.is_real_on_circle);
    CHECK(cb.is_reciprocal);
    CHECK_FALSE(cb.is_anti_reciprocal);
    // Even orders carry the cosine half, odd orders the sine half.
    CHECK(pair.a.coeff(1) == cplx(0.0, 0.0));
    CHECK(pair.b.coeff(2) == cplx(0.0, 0.0));
    CHECK(pair.meta.family == "hs");
    CHECK(pair.meta.subnormalization == 0.5);

    const lqsp::TargetCheck chk = lqsp::check_target_pair(pair);
    CHECK(chk.a_ok);
    CHECK(chk.b_ok);
    CHECK(chk.within_disk);
    CHECK(chk.sup_modulus <= 0.5 + 1e-13);
}

TEST_CASE("random pairs are reproducible and shaped as requested") {
    const TargetPair one = lqsp::build_random(40, 7);
    const TargetPair two = lqsp::build_random(40, 7);
    CHECK(one.a.coeffs() == two.a.coeffs());
    CHECK(one.b.coeffs() == two.b.coeffs());

    CHECK(one.a.trimmed().degree() == 40);
    // nz = min(40/10, 40) = 4 nonzero harmonics, split 2 cosine / 2 sine.
    int count_a = 0;
    int count_b = 0;
    for (int k = 0; k <= 40; ++k) {
        if (one.a.coeff(k) != cplx(0.0, 0.0)) ++count_a;
        if (one.b.coeff(k) != cplx(0.0, 0.0)) ++count_b;
    }
    CHECK(count_a == 2);
    CHECK(count_b == 2);
    CHECK(one.a.coeff(40) != cplx(0.0, 0.0));

    const auto ca = lqsp::classify(one.a);
    const auto cb = lqsp::classify(one.b);
    CHECK(ca.is_real_on_circle);
    CHECK(ca.is_reciprocal);
    CHECK(cb.is_real_on_circle);
    CHECK(cb.is_anti_reciprocal);

    const lqsp::TargetCheck chk = lqsp::check_target_pair(one);
    CHECK(chk.within_disk);
    CHECK(chk.sup_modulus <= 0.5);

    const TargetPair other = lqsp::build_random(40, 8);
    CHECK(one.a.coeffs() != other.a.coeffs());

    CHECK_THROWS_AS(lqsp::build_random(21, 1), lqsp::DomainError);
    CHECK_THROWS_AS(lqsp::build_random(18, 1), lqsp::DomainError);
}

TEST_CASE("exponential degree bound spot value") {
    CHECK(lqsp::n_exp(1.0, 1e-2) == 10);
    CHECK_THROWS_AS(lqsp::n_exp(0.0, 1e-2), lqsp::DomainError);
}

TEST_CASE("threshold order and stable evaluator") {
    CHECK(lqsp::threshold_order(0.1, 1e-2) == 38);
    CHECK_THROWS_AS(lqsp::threshold_order(0.5, 1e-2), lqsp::DomainError);
    CHECK_THROWS_AS(lqsp::threshold_order(0.1, 2.0), lqsp::DomainError);

    const lqsp::ThresholdTarget target = lqsp::build_threshold(0.1, 1e-2);
    CHECK(target.k == 38);
    CHECK(target.evaluator(0.0) == 1.0);
    CHECK(std::abs(target.evaluator(0.1)) <= 5e-3);
    CHECK(std::abs(target.evaluator(-0.1)) <= 5e-3);
    for (double x : {0.15, 0.3, 0.5, 0.75, 1.0}) {
        CHECK(std::abs(target.evaluator(x)) <= 5e-3);
        CHECK(std::abs(target.evaluator(-x)) <= 5e-3);
    }
    CHECK_FALSE(target.overflow);

    // The explicit coefficients reproduce the evaluator and are exactly even.
    CHECK(static_cast<int>(target.chebyshev.size()) == 2 * target.k + 1);
    for (std::size_t m = 1; m < target.chebyshev.size(); m += 2) {
        CHECK(target.chebyshev[m] == 0.0);
    }
    for (double x : {0.0, 0.05, 0.1, 0.33, 0.8, 1.0}) {
        const double direct = lqsp::chebyshev_eval(target.chebyshev, x);
        CHECK(std::abs(direct - target.evaluator(x)) <= 1e-10);
    }
}

TEST_CASE("threshold pair wraps the coefficients") {
    const TargetPair pair = lqsp::threshold_pair(0.1, 1e-2);
    CHECK(pair.meta.family == "threshold");
    CHECK(pair.meta.subnormalization == 0.5);
    CHECK(pair.b.is_zero());
    const auto ca = lqsp::classify(pair.a);
    CHECK(ca.is_real_on_circle);
    CHECK(ca.is_reciprocal);
    // At theta = pi/2 the argument cos(theta) is ~0, the plateau center.
    CHECK(std::abs(2.0 * pair.a.eval(M_PI / 2.0).real() - 1.0) <= 1e-10);
    const lqsp::TargetCheck chk = lqsp::check_target_pair(pair);
    CHECK(chk.within_disk);
}

TEST_CASE("erf expansion matches the C library") {
    const double k = 3.0;
    const std::vector<double> c = lqsp::erf_chebyshev(k, 41);
    for (std::size_t m = 0; m < c.size(); m += 2) CHECK(c[m] == 0.0);
    for (int i = 0; i <= 80; ++i) {
        const double y = -1.0 + 2.0 * i / 80.0;
        const double approx = lqsp::chebyshev_eval(c, y);
        CHECK(std::abs(approx - std::erf(k * y)) <= 1e-10);
    }
    CHECK_THROWS_AS(lqsp::erf_chebyshev(3.0, 40), lqsp::DomainError);
    CHECK_THROWS_AS(lqsp::erf_chebyshev(0.0, 41), lqsp::DomainError);
}

TEST_CASE("smoothed sign pair") {
    const double width = 0.5;
    const double eps = 0.1;
    const TargetPair pair = lqsp::build_sign(0.0, width, eps);
    CHECK(pair.meta.family == "sign");
    CHECK(pair.a.is_zero());
    const auto cb = lqsp::classify(pair.b);
    CHECK(cb.is_real_on_circle);
    CHECK(cb.is_reciprocal);

    // Odd polynomial: zero at the origin, +-1 one transition width out.
    CHECK(std::abs(unscaled_value(pair.b, 0.5, 0.0)) <= 1e-13);
    CHECK(unscaled_value(pair.b, 0.5, width) >= 1.0 - eps);
    CHECK(unscaled_value(pair.b, 0.5, width) <= 1.0 + eps);
    CHECK(unscaled_value(pair.b, 0.5, -width) <= -(1.0 - eps));
    CHECK(unscaled_value(pair.b, 0.5, 1.0) <= 1.0 + eps);

    // Shifted transition keeps the same profile around x = a.
    const TargetPair shifted = lqsp::build_sign(0.25, width, eps);
    CHECK(std::abs(unscaled_value(shifted.b, 0.5, 0.25)) <= 2.0 * eps);
    CHECK(unscaled_value(shifted.b, 0.5, 0.75) >= 1.0 - eps);
    CHECK(unscaled_value(shifted.b, 0.5, -0.25) <= -(1.0 - eps));
    const auto cs = lqsp::classify(shifted.b);
    CHECK(cs.is_real_on_circle);
    CHECK(cs.is_reciprocal);

    CHECK_THROWS_AS(lqsp::build_sign(1.5, width, eps), lqsp::DomainError);
    CHECK_THROWS_AS(lqsp::build_sign(0.0, width, 1.5), lqsp::DomainError);
}

TEST_CASE("rect window pair") {
    const double t = 0.5;
    const double delta = 0.5;
    const double eps = 1e-3;
    const TargetPair pair = lqsp::build_rect(t, delta, eps);
    CHECK(pair.meta.family == "rect");
    CHECK(pair.b.is_zero());
    const auto ca = lqsp::classify(pair.a);
    CHECK(ca.is_real_on_circle);
    CHECK(ca.is_reciprocal);
    // Even window: only even harmonics survive.
    CHECK(pair.a.coeff(1) == cplx(0.0, 0.0));
    CHECK(pair.a.coeff(3) == cplx(0.0, 0.0));

    CHECK(std::abs(unscaled_value(pair.a, 0.5, 0.0) - 1.0) <= 1.5 * eps);
    CHECK(std::abs(unscaled_value(pair.a, 0.5, 1.0)) <= 1.5 * eps);
    CHECK(std::abs(unscaled_value(pair.a, 0.5, -1.0)) <= 1.5 * eps);
    // Symmetry of the window is exact, not approximate.
    CHECK(std::abs(pair.a.eval(1.0).real() - pair.a.eval(M_PI - 1.0).real()) <=
          1e-14);

    CHECK_THROWS_AS(lqsp::build_rect(0.8, 0.5, eps), lqsp::DomainError);
    CHECK_THROWS_AS(lqsp::build_rect(-0.1, 0.5, eps), lqsp::DomainError);
}

TEST_CASE("narrow rect transitions overflow the monomial basis") {
    CHECK_THROWS_AS(lqsp::build_rect(0.5, 0.1, 1e-3),
                    lqsp::CoefficientOverflowError);
    try {
        lqsp::build_rect(0.5, 0.1, 1e-3);
    } catch (const lqsp::CoefficientOverflowError& e) {
        CHECK(e.max_log10_coeff > 308.2547155599167);
    }
}

TEST_CASE("inverse series tail sums") {
    CHECK(lqsp::inverse_series_length(10.0, 1e-2) == 691);
    const std::vector<double> s = lqsp::inverse_odd_tail_sums(10.0, 1e-2);
    CHECK(static_cast<int>(s.size()) == lqsp::inverse_term_cutoff(10.0, 1e-2) + 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
        CHECK(s[j] > 0.0);
        if (j > 0) CHECK(s[j] < s[j - 1]);
    }
    // S_0 is half the off-center binomial mass, just under 1/2.
    CHECK(s[0] < 0.5);
    CHECK(s[0] > 0.4);
    CHECK_THROWS_AS(lqsp::inverse_odd_tail_sums(0.9, 1e-2), lqsp::DomainError);
}

TEST_CASE("inverse pair approximates 1/x away from the origin") {
    const double kappa = 5.0;
    const double eps = 1e-3;
    const TargetPair pair = lqsp::build_inverse(kappa, eps);
    CHECK(pair.meta.family == "inverse");
    CHECK(pair.a.is_zero());
    CHECK(pair.meta.subnormalization <= 1.0 / (2.0 * kappa) + 1e-15);
    CHECK(pair.meta.subnormalization > 0.0);
    // Odd polynomial: even harmonics are absent.
    CHECK(pair.b.coeff(0) == cplx(0.0, 0.0));
    CHECK(pair.b.coeff(2) == cplx(0.0, 0.0));

    const double sub = pair.meta.subnormalization;
    for (double x : {0.9, 0.5, 1.0 / kappa}) {
        CHECK(std::abs(unscaled_value(pair.b, sub, x) - 1.0 / x) <= 2.0 * eps);
    }

    const lqsp::TargetCheck chk = lqsp::check_target_pair(pair);
    CHECK(chk.b_ok);
    CHECK(chk.within_disk);
}

TEST_CASE("matrix inversion pair composes inverse and window") {
    const double kappa = 2.0;
    const double eps = 0.5;
    const TargetPair pair = lqsp::build_matrix_inversion(kappa, eps);
    CHECK(pair.meta.family == "matrix_inversion");
    CHECK(pair.a.is_zero());

    const int j0 = lqsp::inverse_term_cutoff(kappa, eps);
    const double eps_rect = std::min(eps, kappa / (2.0 * j0));
    const std::vector<double> window =
        lqsp::rect_chebyshev(1.0 / (2.0 * kappa), 1.0 / kappa, eps_rect);
    const int expected_degree =
        (2 * j0 + 1) + (static_cast<int>(window.size()) - 1);
    CHECK(pair.b.trimmed().degree() == expected_degree);

    const auto cb = lqsp::classify(pair.b);
    CHECK(cb.is_real_on_circle);
    CHECK(cb.is_reciprocal);
    CHECK(pair.b.coeff(0) == cplx(0.0, 0.0));

    // Far from the suppressed region the product still tracks 1/x, at the
    // loose tolerance this toy eps warrants.
    const double sub = pair.meta.subnormalization;
    CHECK(std::abs(unscaled_value(pair.b, sub, 0.9) - 1.0 / 0.9) <= 2.0 * eps);

    const lqsp::TargetCheck chk = lqsp::check_target_pair(pair);
    CHECK(chk.within_disk);
}

TEST_CASE("realistic matrix inversion overflows the monomial basis") {
    CHECK_THROWS_AS(lqsp::build_matrix_inversion(10.0, 1e-2),
                    lqsp::CoefficientOverflowError);
}
