#pragma once

#include <functional>
#include <vector>

#include "lqsp/linalg.hpp"

namespace lqsp {

// Symmetric trigonometric polynomial
//   F(theta) = f[0] + 2 * sum_{l=1..n} f[l] cos(l theta)
// required to be nonnegative on the circle. Instances are validated on a grid
// witness at construction; a constant-term lift of at most 1e-12 * f[0] keeps
// strictly positive what only grazes zero through round-off.
struct FejerInstance {
    std::vector<double> f;
    double lift = 0.0;

    int degree() const { return static_cast<int>(f.size()) - 1; }

    // F(theta), evaluated by a complex Horner pass.
    double eval(double theta) const;
};

// Validates shape, finiteness and the 8*(n+1)-point nonnegativity witness.
// Throws NegativeInstanceError when the witness dips below -1e-12 * f[0].
FejerInstance make_fejer_instance(std::vector<double> half_coeffs);

// r[l] = sum_m g[m] g[m+l] for l = 0..n, each lag summed with compensation.
std::vector<double> autocorrelation(const std::vector<double>& g);

// Jacobian of the autocorrelation map at g:
//   J[i][j] = (i+j <= n ? g[i+j] : 0) + (j >= i ? g[j-i] : 0).
Matrix wilson_jacobian(const std::vector<double>& g);

// Winding number of theta -> g(e^{i theta}) around the origin, accumulated
// from principal-value phase increments over a 16*(deg+1) point grid. Zero
// means all roots of g lie outside the closed unit disk.
int winding_number(const std::vector<double>& g);

struct WilsonOptions {
    double eps = 1e-14;
    int max_iter = 200;
    // Called after every Newton solve with (iteration index, new residual).
    std::function<void(int, double)> observer;
};

struct WilsonReport {
    int iterations = 0;
    double residual_linf = 0.0;
    bool converged = false;
    int winding = 0;
    // Residuals in l_inf, starting with the initial guess, one entry appended
    // per Newton solve.
    std::vector<double> residual_history;
};

// Newton iteration for the spectral factor g of F: autocorrelation(g) = f,
// with g minimum phase (all roots outside the closed unit disk) and g[0] > 0.
// Starts from g = (sqrt(f[0]), 0, ..., 0); each step solves
//   J(g_k) g_{k+1} = autocorrelation(g_k) + f.
// Convergence means the residual dropped to opts.eps and the winding check
// passed. Non-convergence is reported, not thrown.
std::vector<double> wilson_factorize(const FejerInstance& instance,
                                     const WilsonOptions& opts,
                                     WilsonReport& report);

}  // namespace lqsp
