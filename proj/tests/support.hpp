#pragma once

// Helpers shared by the test binaries: a deterministic counter-based random
// stream and forward-constructed spectral factorization instances whose exact
// answer is known by construction.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "lqsp/decompose.hpp"

namespace testsupport {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in [0, 1), fully determined by (seed, counter).
inline double uniform01(uint64_t seed, uint64_t counter) {
    uint64_t mixed = splitmix64(seed ^ (counter * 0xd1342543de82ef95ULL));
    return static_cast<double>(mixed >> 11) * 0x1.0p-53;
}

// Real coefficients of prod_i (1 - z / roots[i]); the root set must be closed
// under conjugation. Constant term is 1.
inline std::vector<double> poly_with_roots(
    const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> c = {{1.0, 0.0}};
    for (const auto& root : roots) {
        std::complex<double> factor = -1.0 / root;
        c.push_back({0.0, 0.0});
        for (size_t k = c.size() - 1; k > 0; --k) {
            c[k] = c[k] + factor * c[k - 1];
        }
    }
    std::vector<double> out(c.size());
    for (size_t k = 0; k < c.size(); ++k) {
        out[k] = c[k].real();
    }
    return out;
}

// Minimum-phase coefficient vector of the given degree: all roots have modulus
// in [1.1, 3], the set is conjugate closed, and the vector is scaled so its
// autocorrelation has unit constant term.
inline std::vector<double> min_phase_gamma(int degree, uint64_t seed) {
    std::vector<std::complex<double>> roots;
    uint64_t counter = 0;
    int remaining = degree;
    if (remaining % 2 == 1) {
        double modulus = 1.1 + 1.9 * uniform01(seed, counter++);
        double sign = uniform01(seed, counter++) < 0.5 ? -1.0 : 1.0;
        roots.push_back({sign * modulus, 0.0});
        remaining -= 1;
    }
    while (remaining > 0) {
        double modulus = 1.1 + 1.9 * uniform01(seed, counter++);
        double angle = (0.05 + 0.9 * uniform01(seed, counter++)) * M_PI;
        std::complex<double> r = std::polar(modulus, angle);
        roots.push_back(r);
        roots.push_back(std::conj(r));
        remaining -= 2;
    }
    std::vector<double> g = poly_with_roots(roots);
    double norm_sq = 0.0;
    for (double v : g) norm_sq += v * v;
    double inv = 1.0 / std::sqrt(norm_sq);
    for (double& v : g) v *= inv;
    if (g[0] < 0.0) {
        for (double& v : g) v = -v;
    }
    return g;
}

// Random projector with unit direction vector, determined by (seed, counter).
// Advances counter past the values it consumed.
inline lqsp::Projector random_projector(uint64_t seed, uint64_t& counter) {
    // Four independent gaussians via Box-Muller give a Haar-uniform direction.
    double u1 = uniform01(seed, counter++);
    double u2 = uniform01(seed, counter++);
    double u3 = uniform01(seed, counter++);
    double u4 = uniform01(seed, counter++);
    double r1 = std::sqrt(-2.0 * std::log(1.0 - u1));
    double r2 = std::sqrt(-2.0 * std::log(1.0 - u3));
    std::complex<double> v0(r1 * std::cos(2.0 * M_PI * u2),
                            r1 * std::sin(2.0 * M_PI * u2));
    std::complex<double> v1(r2 * std::cos(2.0 * M_PI * u4),
                            r2 * std::sin(2.0 * M_PI * u4));
    double norm = std::sqrt(std::norm(v0) + std::norm(v1));
    return lqsp::Projector{v0 / norm, v1 / norm};
}

// Right-multiplies a matrix Laurent polynomial in w by the degree-one factor
// w^{-1} P + w Q, where P projects onto the projector direction and Q is its
// complement. Raises the half degree by one: the w^{k} coefficient of the
// product collects C_{k+1} P + C_{k-1} Q.
inline lqsp::MatrixCoefficientList forward_multiply(
    const lqsp::MatrixCoefficientList& f, const lqsp::Projector& p) {
    const lqsp::Mat2 pm = p.matrix();
    const lqsp::Mat2 qm = lqsp::mat2_identity() - pm;
    lqsp::MatrixCoefficientList out;
    out.half_degree = f.half_degree + 1;
    out.coeffs.assign(f.coeffs.size() + 1, lqsp::Mat2{});
    for (size_t t = 0; t < out.coeffs.size(); ++t) {
        // out index t sits at exponent -out.half_degree + 2t; the P term
        // comes from the old coefficient one step up, the Q term one down.
        if (t < f.coeffs.size()) out.coeffs[t] = out.coeffs[t] + f.coeffs[t] * pm;
        if (t > 0) out.coeffs[t] = out.coeffs[t] + f.coeffs[t - 1] * qm;
    }
    return out;
}

// Builds E0 * prod_k (w^{-1} P_k + w Q_k) with random projectors; the exact
// decomposition is known by construction.
inline lqsp::MatrixCoefficientList forward_sequence(
    const lqsp::Mat2& e0, const std::vector<lqsp::Projector>& projectors) {
    lqsp::MatrixCoefficientList f;
    f.half_degree = 0;
    f.coeffs = {e0};
    for (const auto& p : projectors) f = forward_multiply(f, p);
    return f;
}

}  // namespace testsupport
