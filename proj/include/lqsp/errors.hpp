#pragma once

#include <stdexcept>
#include <string>

namespace lqsp {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (negative degree, eps out of range, mismatched sizes...).
struct DomainError : Error {
    using Error::Error;
};

// Arguments outside the numerically supported window of an algorithm
// (e.g. Bessel order/argument beyond the recurrence's validated range).
struct RangeUnsupportedError : Error {
    using Error::Error;
};

// Sampling grid too coarse for the polynomial degree at hand.
struct GridTooCoarseError : Error {
    using Error::Error;
};

// A pivot collapsed during LU elimination.
struct SingularMatrixError : Error {
    using Error::Error;
};

// A spectral-factorization input failed its nonnegativity witness.
struct NegativeInstanceError : Error {
    using Error::Error;
};

// A target pair with sampled |A|^2+|B|^2 above one cannot be completed.
struct NotCompletableError : Error {
    using Error::Error;
};

// Newton iteration gave up; the message carries the residual it stalled at.
struct NoConvergenceError : Error {
    using Error::Error;
};

// A matrix polynomial that should be unitary on the circle is not, beyond tolerance.
struct NotUnitaryError : Error {
    using Error::Error;
};

// Leading matrix coefficient too small to extract a projector direction from.
struct LeadTooSmallError : Error {
    LeadTooSmallError(const std::string& msg, int step) : Error(msg), peel_step(step) {}
    int peel_step;
};

// A builder produced (or would produce) coefficients outside binary64 range.
struct CoefficientOverflowError : Error {
    CoefficientOverflowError(const std::string& msg, double max_log10)
        : Error(msg), max_log10_coeff(max_log10) {}
    double max_log10_coeff;
};

}  // namespace lqsp
