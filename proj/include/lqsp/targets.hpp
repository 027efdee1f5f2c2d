#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lqsp/laurent.hpp"

namespace lqsp {

// Provenance of a generated target pair. Unused parameters stay at their
// defaults; family says which ones are meaningful.
struct TargetMeta {
    std::string family;  // hs, random, threshold, rect, sign, erf,
                         // inverse, matrix_inversion
    double tau = 0.0;
    double eps_approx = 0.0;
    double kappa = 0.0;
    double delta = 0.0;
    double t = 0.0;
    double a = 0.0;
    std::int64_t seed = 0;
    double subnormalization = 1.0;
};

// Bounded pair (A, B), both real on the unit circle, with A reciprocal and
// |A + iB| <= 1 everywhere on the circle. The completion stage extends it to
// a full unitary.
struct TargetPair {
    LaurentPolynomial a;
    LaurentPolynomial b;
    TargetMeta meta;
};

struct TargetCheck {
    bool a_ok = false;       // A real on circle and reciprocal
    bool b_ok = false;       // B real on circle with a definite parity class
    double sup_modulus = 0.0;
    bool within_disk = false;
};

// Samples |A + iB| on a grid (default 8*(2n+1) points) and classifies both
// members. within_disk allows sup_modulus <= 1 + tol.
TargetCheck check_target_pair(const TargetPair& pair, int grid_points = 0,
                              double tol = 1e-12);

// Generic Clenshaw evaluation of sum c[m] T_m(x).
double chebyshev_eval(std::span<const double> c, double x);

// --- Hamiltonian simulation: A + iB tracks exp(i tau cos theta) / 2 ---

// Series cutoff giving tail mass below eps for the Jacobi-Anger expansion.
int truncation_hs(double tau, double eps);

TargetPair build_hamiltonian_sim(double tau, double eps);

// --- Random bounded pairs, reproducible from a seed ---

// n must be even and >= 20. Coefficients are drawn from a counter-based
// stream, so the result is identical across platforms and runs.
TargetPair build_random(int n, std::int64_t seed);

// --- Threshold (band indicator) via scaled Chebyshev ---

int threshold_order(double delta, double eps);

// The threshold approximant is materialized two ways: a numerically stable
// evaluator that works at any order, and an explicit Chebyshev coefficient
// list (exactly even) for downstream embedding. overflow reports whether the
// monomial-basis coefficients of the ratio polynomial exceed binary64 range.
struct ThresholdTarget {
    std::function<double(double)> evaluator;
    std::vector<double> chebyshev;
    int k = 0;
    bool overflow = false;
};

ThresholdTarget build_threshold(double delta, double eps);

// Wraps the threshold Chebyshev list as a bounded pair (A = poly / 2, B = 0).
TargetPair threshold_pair(double delta, double eps);

// --- Smoothed sign / rect / erf machinery ---

// Degree bound for approximating exp(beta(x - 1)) to eps on [-1, 1].
int n_exp(double beta, double eps);

// Chebyshev coefficients (length n + 1, even entries exactly zero) of the
// odd polynomial approximating erf(k x) on [-1, 1]; n must be odd.
std::vector<double> erf_chebyshev(double k, int n);

// Sharpness and truncation used by the sign builder for a transition of
// half-width kappa_width resolved to eps.
double sign_sharpness(double kappa_width, double eps);
int sign_erf_terms(double k, double eps);

TargetPair build_sign(double a, double kappa_width, double eps);

// Chebyshev-in-x coefficients (exactly even) of the unsubnormalized window
// polynomial approximating the indicator of [-t, t] with transition width
// delta; shared by build_rect and build_matrix_inversion.
std::vector<double> rect_chebyshev(double t, double delta, double eps);

// Indicator of [-t, t] with transition width delta, built from two shifted
// copies of the smoothed sign polynomial.
TargetPair build_rect(double t, double delta, double eps);

// --- Inverse and matrix inversion ---

// Length parameter b and odd-term cutoff j0 of the 1/x Chebyshev series.
int inverse_series_length(double kappa, double eps);
int inverse_term_cutoff(double kappa, double eps);

// Tail sums S_j (j = 0..j0) of the central binomial weights; positive and
// strictly decreasing.
std::vector<double> inverse_odd_tail_sums(double kappa, double eps);

TargetPair build_inverse(double kappa, double eps);

// 1/x multiplied by a rect window that suppresses the singular region; the
// standard target for linear-system solving.
TargetPair build_matrix_inversion(double kappa, double eps);

}  // namespace lqsp
