#include "lqsp/targets.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <unordered_set>
#include <utility>

#include "lqsp/bessel.hpp"
#include "lqsp/errors.hpp"
#include "lqsp/rng.hpp"

namespace lqsp {

namespace {

constexpr double kE = 2.718281828459045235;
constexpr std::span<const double> kNoSeries{};

}  // namespace

TargetCheck check_target_pair(const TargetPair& pair, int grid_points, double tol) {
    const int n = std::max(pair.a.degree(), pair.b.degree());
    const int grid = grid_points > 0 ? grid_points : 8 * (2 * n + 1);
    TargetCheck out;
    const CirclePredicateReport ca = classify(pair.a, tol);
    const CirclePredicateReport cb = classify(pair.b, tol);
    out.a_ok = ca.is_real_on_circle && ca.is_reciprocal;
    out.b_ok = cb.is_real_on_circle && (cb.is_reciprocal || cb.is_anti_reciprocal);
    double sup = 0.0;
    for (int j = 0; j < grid; ++j) {
        const double theta = 2.0 * M_PI * static_cast<double>(j) / grid;
        const cplx v = pair.a.eval(theta) + cplx{0.0, 1.0} * pair.b.eval(theta);
        sup = std::max(sup, std::abs(v));
    }
    out.sup_modulus = sup;
    out.within_disk = sup <= 1.0 + tol;
    return out;
}

double chebyshev_eval(std::span<const double> c, double x) {
    if (c.empty()) return 0.0;
    double bk1 = 0.0;
    double bk2 = 0.0;
    for (std::size_t m = c.size() - 1; m >= 1; --m) {
        const double bk = c[m] + 2.0 * x * bk1 - bk2;
        bk2 = bk1;
        bk1 = bk;
    }
    return c[0] + x * bk1 - bk2;
}

int truncation_hs(double tau, double eps) {
    if (!(tau > 0.0) || !(eps > 0.0) || !(eps < 1.0)) {
        throw DomainError("truncation_hs: need tau > 0 and eps in (0, 1)");
    }
    const double log_inv = std::log(1.0 / eps);
    double r;
    if (tau >= log_inv / kE) {
        r = std::ceil(kE * tau + log_inv);
    } else {
        r = std::ceil(4.0 * log_inv / std::log(kE + log_inv / tau));
    }
    return static_cast<int>(r);
}

TargetPair build_hamiltonian_sim(double tau, double eps) {
    const int r = truncation_hs(tau, eps);
    const std::vector<double> j = bessel_j_all(r, tau);

    // cos(tau cos t) = J_0 + 2 sum (-1)^m J_{2m} cos(2mt); keep even orders
    // through r. sin(tau cos t) = 2 sum (-1)^m J_{2m+1} cos((2m+1)t); keep
    // odd orders through r. Halving both gives |A + iB| <= 1/2.
    const int na = r - (r % 2);
    std::vector<double> a_cos(na + 1, 0.0);
    a_cos[0] = j[0] / 2.0;
    for (int m = 1; 2 * m <= na; ++m) {
        a_cos[2 * m] = (m % 2 == 0 ? 1.0 : -1.0) * j[2 * m];
    }

    const int nb = r >= 1 ? r - (r % 2 == 0 ? 1 : 0) : 0;
    std::vector<double> b_cos(std::max(nb, 0) + 1, 0.0);
    for (int m = 0; 2 * m + 1 <= nb; ++m) {
        b_cos[2 * m + 1] = (m % 2 == 0 ? 1.0 : -1.0) * j[2 * m + 1];
    }

    TargetPair pair{from_chebyshev(a_cos, kNoSeries), from_chebyshev(b_cos, kNoSeries), {}};
    pair.meta.family = "hs";
    pair.meta.tau = tau;
    pair.meta.eps_approx = eps;
    pair.meta.subnormalization = 0.5;
    return pair;
}

TargetPair build_random(int n, std::int64_t seed) {
    if (n < 20 || n % 2 != 0) {
        throw DomainError("build_random: degree must be even and at least 20");
    }
    const std::uint64_t s = static_cast<std::uint64_t>(seed);
    std::uint64_t counter = 0;
    auto next = [&]() { return random_uniform01(s, counter++); };

    const int nz = std::min(n / 10, 40);
    const int nz_a = (nz + 1) / 2;
    const int nz_b = nz - nz_a;
    const int half = n / 2;

    // Cosine slots are even orders 0..n with the top order always present so
    // the trimmed degree is exactly n; sine slots are odd orders 1..n-1.
    // Slot selection rejects repeats, value draws reject exact zeros, and
    // both consume the same counter stream, so one seed fixes every byte.
    std::unordered_set<int> a_slots{n};
    while (static_cast<int>(a_slots.size()) < nz_a) {
        a_slots.insert(2 * static_cast<int>(next() * half));
    }
    std::unordered_set<int> b_slots;
    while (static_cast<int>(b_slots.size()) < nz_b) {
        b_slots.insert(2 * static_cast<int>(next() * half) + 1);
    }

    std::vector<int> a_order(a_slots.begin(), a_slots.end());
    std::vector<int> b_order(b_slots.begin(), b_slots.end());
    std::sort(a_order.begin(), a_order.end());
    std::sort(b_order.begin(), b_order.end());

    auto draw_value = [&]() {
        double v = next();
        while (v == 0.0) v = next();
        return v;
    };
    std::vector<double> a_cos(n + 1, 0.0);
    for (int m : a_order) a_cos[m] = draw_value();
    std::vector<double> b_sin(n + 1, 0.0);
    for (int m : b_order) b_sin[m] = draw_value();

    LaurentPolynomial a = from_chebyshev(a_cos, kNoSeries);
    LaurentPolynomial b = from_chebyshev(kNoSeries, b_sin);

    const LaurentPolynomial combined = add(a, scale(b, cplx{0.0, 1.0}));
    const double sup = linf_on_circle(combined, 8 * (2 * n + 1));
    const double margin = 1.0 + 1e-3;
    const double rescale = 1.0 / (sup * 2.0 * margin);

    TargetPair pair{scale(a, cplx{rescale, 0.0}), scale(b, cplx{rescale, 0.0}), {}};
    pair.meta.family = "random";
    pair.meta.seed = seed;
    pair.meta.subnormalization = 1.0 / (2.0 * margin);
    return pair;
}

int n_exp(double beta, double eps) {
    if (!(beta > 0.0) || !(eps > 0.0) || !(eps < 1.0)) {
        throw DomainError("n_exp: need beta > 0 and eps in (0, 1)");
    }
    const double inner = std::ceil(std::max(beta * kE * kE, std::log(2.0 / eps)));
    return static_cast<int>(std::ceil(std::sqrt(2.0 * std::log(4.0 / eps) * inner)));
}

int threshold_order(double delta, double eps) {
    if (!(delta > 0.0) || delta > 1.0 / std::sqrt(12.0)) {
        throw DomainError("threshold_order: need 0 < delta <= 1/sqrt(12)");
    }
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw DomainError("threshold_order: need eps in (0, 1)");
    }
    return static_cast<int>(std::ceil(std::log(2.0 / eps) / (std::sqrt(2.0) * delta)));
}

int inverse_series_length(double kappa, double eps) {
    if (!(kappa > 1.0) || !(eps > 0.0) || !(eps < 1.0)) {
        throw DomainError("inverse_series_length: need kappa > 1 and eps in (0, 1)");
    }
    return static_cast<int>(std::ceil(kappa * kappa * std::log(kappa / eps)));
}

int inverse_term_cutoff(double kappa, double eps) {
    const double b = inverse_series_length(kappa, eps);
    return static_cast<int>(std::ceil(std::sqrt(b * std::log(4.0 * b / eps))));
}

}  // namespace lqsp
