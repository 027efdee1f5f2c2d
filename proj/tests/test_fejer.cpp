#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "lqsp/errors.hpp"
#include "lqsp/fejer.hpp"
#include "support.hpp"

TEST_CASE("autocorrelation matches hand convolutions") {
    auto r = lqsp::autocorrelation({2.0, 1.0});
    REQUIRE(r.size() == 2);
    CHECK(r[0] == 5.0);
    CHECK(r[1] == 2.0);

    auto s = lqsp::autocorrelation({3.0, 1.0, 1.0});
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 11.0);
    CHECK(s[1] == 4.0);
    CHECK(s[2] == 3.0);
}

TEST_CASE("jacobian agrees with central differences") {
    std::vector<double> g = {0.8, 0.3, -0.2, 0.1};
    auto j = lqsp::wilson_jacobian(g);
    const double h = 1e-4;
    for (size_t col = 0; col < g.size(); ++col) {
        auto hi = g, lo = g;
        hi[col] += h;
        lo[col] -= h;
        auto r_hi = lqsp::autocorrelation(hi);
        auto r_lo = lqsp::autocorrelation(lo);
        for (size_t row = 0; row < g.size(); ++row) {
            double fd = (r_hi[row] - r_lo[row]) / (2.0 * h);
            CHECK(std::abs(j.at(static_cast<int>(row), static_cast<int>(col)) - fd) <= 1e-9);
        }
    }
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(lqsp::make_fejer_instance({}), lqsp::DomainError);
    CHECK_THROWS_AS(lqsp::make_fejer_instance({1.0, std::nan("")}), lqsp::DomainError);
    CHECK_THROWS_AS(lqsp::make_fejer_instance({-1.0}), lqsp::NegativeInstanceError);
    CHECK_THROWS_AS(lqsp::make_fejer_instance({0.0, 0.1}), lqsp::NegativeInstanceError);
    // 0.1 + cos(theta) goes clearly negative.
    CHECK_THROWS_AS(lqsp::make_fejer_instance({0.1, 0.5}), lqsp::NegativeInstanceError);
}

TEST_CASE("grazing instances get a constant lift") {
    // 1 - cos(theta) touches zero at theta = 0, which the witness grid contains.
    auto lifted = lqsp::make_fejer_instance({1.0, -0.5});
    CHECK(lifted.lift == 1e-12);
    CHECK(lifted.f[0] == 1.0 + 1e-12);

    // 0.6 + 0.5 cos(theta) stays at least 0.1, no lift.
    auto clear = lqsp::make_fejer_instance({0.6, 0.25});
    CHECK(clear.lift == 0.0);
    CHECK(clear.f[0] == 0.6);
    CHECK(std::abs(clear.eval(M_PI / 3.0) - 0.85) <= 1e-15);
}

TEST_CASE("winding number counts roots inside the disk") {
    // 1 - z/2: root at 2, outside.
    CHECK(lqsp::winding_number({1.0, -0.5}) == 0);
    // -0.5 + z: root at 0.5, inside.
    CHECK(lqsp::winding_number({-0.5, 1.0}) == 1);
    // 0.25 + z^2: both roots at modulus 0.5.
    CHECK(lqsp::winding_number({0.25, 0.0, 1.0}) == 2);
    // Constant.
    CHECK(lqsp::winding_number({3.0}) == 0);
}

TEST_CASE("recovers a forward-constructed minimum-phase factor") {
    // gamma with roots {2, -1.5, 1.2 +- 0.8i}, scaled to unit autocorrelation
    // mean; its autocorrelation is the instance and gamma itself the answer.
    std::vector<std::complex<double>> roots = {
        {2.0, 0.0}, {-1.5, 0.0}, {1.2, 0.8}, {1.2, -0.8}};
    auto gamma = testsupport::poly_with_roots(roots);
    double norm_sq = 0.0;
    for (double v : gamma) norm_sq += v * v;
    for (double& v : gamma) v /= std::sqrt(norm_sq);

    auto instance = lqsp::make_fejer_instance(lqsp::autocorrelation(gamma));
    REQUIRE(instance.lift == 0.0);

    lqsp::WilsonReport report;
    auto g = lqsp::wilson_factorize(instance, {}, report);
    CHECK(report.converged);
    CHECK(report.iterations <= 60);
    CHECK(report.residual_linf <= 1e-14);
    CHECK(report.winding == 0);
    REQUIRE(g.size() == gamma.size());
    for (size_t k = 0; k < g.size(); ++k) {
        CHECK(std::abs(g[k] - gamma[k]) <= 1e-10);
    }
}

TEST_CASE("recovery holds across seeded instances") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        int degree = 3 + static_cast<int>(seed * 5 % 14);
        auto gamma = testsupport::min_phase_gamma(degree, seed);
        auto instance = lqsp::make_fejer_instance(lqsp::autocorrelation(gamma));
        lqsp::WilsonReport report;
        auto g = lqsp::wilson_factorize(instance, {}, report);
        CHECK(report.converged);
        for (size_t k = 0; k < g.size(); ++k) {
            CHECK(std::abs(g[k] - gamma[k]) <= 1e-10);
        }
    }
}

TEST_CASE("observer sees every solve") {
    auto gamma = testsupport::min_phase_gamma(6, 42);
    auto instance = lqsp::make_fejer_instance(lqsp::autocorrelation(gamma));
    std::vector<std::pair<int, double>> seen;
    lqsp::WilsonOptions opts;
    opts.observer = [&](int iter, double residual) { seen.emplace_back(iter, residual); };
    lqsp::WilsonReport report;
    lqsp::wilson_factorize(instance, opts, report);
    REQUIRE(static_cast<int>(seen.size()) == report.iterations);
    for (size_t k = 0; k < seen.size(); ++k) {
        CHECK(seen[k].first == static_cast<int>(k) + 1);
        CHECK(seen[k].second == report.residual_history[k + 1]);
    }
}

TEST_CASE("degree zero factorizes immediately") {
    auto instance = lqsp::make_fejer_instance({2.25});
    lqsp::WilsonReport report;
    auto g = lqsp::wilson_factorize(instance, {}, report);
    CHECK(report.converged);
    CHECK(report.iterations == 0);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == 1.5);
}

TEST_CASE("iteration cap reports rather than throws") {
    auto gamma = testsupport::min_phase_gamma(12, 7);
    auto instance = lqsp::make_fejer_instance(lqsp::autocorrelation(gamma));
    lqsp::WilsonOptions opts;
    opts.max_iter = 1;
    lqsp::WilsonReport report;
    lqsp::wilson_factorize(instance, opts, report);
    CHECK_FALSE(report.converged);
    CHECK(report.iterations == 1);
    CHECK(report.residual_history.size() == 2);
}
