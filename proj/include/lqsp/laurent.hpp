#pragma once

#include <complex>
#include <span>
#include <vector>

namespace lqsp {

using cplx = std::complex<double>;

// Laurent polynomial p(z) = sum_{k=-n}^{n} c_k z^k meant to be evaluated on the
// unit circle z = e^{i theta}. Coefficients are stored densely; c_k lives at
// index k + n. Values are immutable after construction, all operations on them
// are pure functions.
class LaurentPolynomial {
public:
    // Zero polynomial of degree 0.
    LaurentPolynomial() : degree_(0), coeffs_(1, cplx(0.0, 0.0)) {}

    // Takes ownership of a dense coefficient list of size 2*degree+1.
    // The stored degree is whatever the caller says; it is not tightened here
    // (use trimmed() for that), so zero edge coefficients are representable.
    LaurentPolynomial(int degree, std::vector<cplx> coeffs);

    static LaurentPolynomial zero() { return LaurentPolynomial(); }
    static LaurentPolynomial constant(cplx c);
    static LaurentPolynomial monomial(int k, cplx c = cplx(1.0, 0.0));

    int degree() const { return degree_; }

    // c_k, with k outside [-n, n] reading as zero.
    cplx coeff(int k) const {
        if (k < -degree_ || k > degree_) return cplx(0.0, 0.0);
        return coeffs_[static_cast<size_t>(k + degree_)];
    }

    const std::vector<cplx>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    // Value at z = e^{i theta}. Summation is compensated so that round-off
    // stays near machine epsilon even for degrees in the thousands; callers
    // compare these values against 1e-13-grade tolerances.
    cplx eval(double theta) const;

    // Drops leading/trailing coefficients of modulus <= 1e-300 so the degree
    // becomes tight. The all-zero polynomial collapses to degree 0.
    LaurentPolynomial trimmed() const;

private:
    int degree_;
    std::vector<cplx> coeffs_;
};

// Symmetry classification of a coefficient list, each predicate checked in
// l_inf up to an absolute tolerance:
//   real-on-circle:  c_k == conj(c_{-k})   (p real valued on |z| = 1)
//   reciprocal:      c_k == c_{-k}         (p(z) == p(1/z))
//   anti-reciprocal: c_k == -c_{-k}        (p(z) == -p(1/z))
// max_deviation reports the smallest of the three symmetry defects, i.e. how
// far the polynomial is from the nearest class.
struct CirclePredicateReport {
    bool is_real_on_circle = false;
    bool is_reciprocal = false;
    bool is_anti_reciprocal = false;
    double max_deviation = 0.0;
};

cplx eval_on_circle(const LaurentPolynomial& p, double theta);

// Convolution product; result degree is deg(p) + deg(q), untrimmed.
LaurentPolynomial product(const LaurentPolynomial& p, const LaurentPolynomial& q);

// Star involution c_k -> conj(c_{-k}); on the circle this is complex conjugation.
LaurentPolynomial star(const LaurentPolynomial& p);

CirclePredicateReport classify(const LaurentPolynomial& p, double tol = 1e-12);

// Builds the circle-basis polynomial
//   sum_k kind1[k] * T_k(cos theta)  +  sum_k kind2sin[k] * sin(k theta)
// i.e. T_k maps to (z^k + z^{-k})/2 (z^0 for k = 0) and sin(k theta) maps to
// (z^k - z^{-k})/(2i). kind2sin[0] multiplies sin(0) and must be zero.
LaurentPolynomial from_chebyshev(std::span<const double> kind1,
                                 std::span<const double> kind2sin);

// Max of |p| over a uniform theta grid on [0, 2pi). Requires
// grid_points >= 4*(degree+1), otherwise GridTooCoarseError.
double linf_on_circle(const LaurentPolynomial& p, int grid_points);

// Pointwise sums/differences/scalar multiples, padding to the larger degree.
LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial subtract(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial scale(const LaurentPolynomial& p, cplx factor);

}  // namespace lqsp
