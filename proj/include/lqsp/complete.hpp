#pragma once

#include "lqsp/fejer.hpp"
#include "lqsp/laurent.hpp"
#include "lqsp/targets.hpp"

namespace lqsp {

// Diagnostics of one completion run. eps_coeff is the sampled deviation of
// A^2+B^2+C^2+D^2 from one; downstream stages inherit it as the unitarity
// defect of their input. elapsed_seconds times the factorization only.
struct CompletionReport {
    WilsonReport wilson;
    double unitarity_residual = 0.0;
    double eps_coeff = 0.0;
    double elapsed_seconds = 0.0;
};

// Bounded pair extended to a pointwise-unitary quadruple:
// A^2 + B^2 + C^2 + D^2 = 1 on the circle, up to report.unitarity_residual.
// C is reciprocal with real coefficients and D anti-reciprocal with imaginary
// coefficients, both of the same degree as the spectral factor they came from.
struct CompletedQuadruple {
    LaurentPolynomial a;
    LaurentPolynomial b;
    LaurentPolynomial c;
    LaurentPolynomial d;
    CompletionReport report;
};

// Half-spectrum coefficient list of 1 - A^2 - B^2, validated as a
// factorization instance. A must be reciprocal and B of a definite
// reciprocity class, both real on the circle, so the deficiency comes out
// real and symmetric. Throws NotCompletableError when the sampled A^2+B^2
// exceeds 1 + 1e-12.
FejerInstance deficiency_polynomial(const LaurentPolynomial& a,
                                    const LaurentPolynomial& b);

// Replaces the identically-zero member of the pair by a small polynomial of
// degree n-1 (n the degree of the surviving member) so the factorization
// instance stays strictly positive. The replacement has uniform coefficient
// magnitude max(1e-13, eps), lives on the index parity opposite to n, and is
// anti-reciprocal when standing in for B, reciprocal when standing in for A.
// Requires exactly one member to be zero.
TargetPair handle_zero_component(const TargetPair& pair, double eps);

// Full completion: factorize the deficiency and assemble C + iD from the
// spectral factor. A pair with A^2 + B^2 = 1 already short-circuits to
// C = D = 0; a pair with one zero member is padded first. Throws
// NoConvergenceError when the Newton iteration fails to reach eps_fejer.
CompletedQuadruple complete(const TargetPair& pair, double eps_fejer = 1e-14,
                            int max_iter = 200);

}  // namespace lqsp
