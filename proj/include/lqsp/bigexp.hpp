#pragma once

#include <cmath>
#include <cstdint>

namespace lqsp {

// Signed floating-point value m * 2^e with the exponent held in an int64, for
// polynomial coefficient arithmetic whose magnitudes dwarf binary64 range.
// Mantissas keep full double precision, so relative error stays at the usual
// few ulps per operation; only the representable range is extended.
struct BigExp {
    double m = 0.0;  // in +-[0.5, 1) after normalization, or exactly 0
    int64_t e = 0;

    static BigExp from(double v) {
        BigExp out;
        if (v == 0.0) return out;
        int k = 0;
        out.m = std::frexp(v, &k);
        out.e = k;
        return out;
    }

    bool is_zero() const { return m == 0.0; }

    double log10_abs() const {
        // Meaningless for zero; callers filter zeros first.
        return std::log10(std::abs(m)) +
               static_cast<double>(e) * 0.30102999566398119521;
    }

    BigExp normalized() const {
        if (m == 0.0) return BigExp{};
        int k = 0;
        BigExp out;
        out.m = std::frexp(m, &k);
        out.e = e + k;
        return out;
    }
};

inline BigExp operator*(BigExp a, BigExp b) {
    if (a.is_zero() || b.is_zero()) return BigExp{};
    BigExp out;
    out.m = a.m * b.m;  // in +-[0.25, 1), one frexp renormalizes
    out.e = a.e + b.e;
    return out.normalized();
}

inline BigExp operator*(BigExp a, double s) { return a * BigExp::from(s); }

inline BigExp operator+(BigExp a, BigExp b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.e < b.e) {
        BigExp t = a;
        a = b;
        b = t;
    }
    int64_t shift = a.e - b.e;
    // The smaller addend is below one ulp of the larger past 64 bits.
    if (shift > 64) return a;
    BigExp out;
    out.m = a.m + std::ldexp(b.m, -static_cast<int>(shift));
    out.e = a.e;
    return out.normalized();
}

inline BigExp operator-(BigExp a, BigExp b) {
    b.m = -b.m;
    return a + b;
}

// Division by zero is the caller's bug; b must be nonzero.
inline BigExp operator/(BigExp a, BigExp b) {
    if (a.is_zero()) return BigExp{};
    BigExp out;
    out.m = a.m / b.m;  // in +-(0.5, 2), one frexp renormalizes
    out.e = a.e - b.e;
    return out.normalized();
}

// |a| < |b| as magnitudes.
inline bool magnitude_less(BigExp a, BigExp b) {
    if (a.is_zero()) return !b.is_zero();
    if (b.is_zero()) return false;
    if (a.e != b.e) return a.e < b.e;
    return std::abs(a.m) < std::abs(b.m);
}

}  // namespace lqsp
