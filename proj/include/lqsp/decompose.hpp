#pragma once

#include <vector>

#include "lqsp/complete.hpp"
#include "lqsp/laurent.hpp"

namespace lqsp {

// Dense 2x2 complex matrix, row major. Small enough that value semantics and
// hand-written closed forms beat any general linear algebra here.
struct Mat2 {
    cplx m00, m01, m10, m11;
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(cplx s, const Mat2& a);
Mat2 adjoint(const Mat2& a);
Mat2 mat2_identity();

// Largest singular value, from the closed-form eigenvalues of a^dagger a.
double operator_norm(const Mat2& a);

// Unitary polar factor of a, the closest unitary matrix in Frobenius and
// spectral norm. A rank-deficient input gets its missing direction filled in
// orthogonally, so the result is always exactly unitary up to round-off.
Mat2 polar_unitary(const Mat2& a);

// Matrix Laurent polynomial in the half-angle variable w = e^{i theta/2}:
// F(w) = sum_t coeffs[t] w^{-half_degree + 2t}. The support therefore sits on
// indices of the same parity as half_degree, and multiplying by a single
// projector factor shifts that parity by one.
struct MatrixCoefficientList {
    int half_degree = 0;
    std::vector<Mat2> coeffs;  // size half_degree + 1
    double eps_coeff = 0.0;    // sampled deviation of F F^dagger from identity

    // Value at w = e^{i theta/2}.
    Mat2 eval(double theta) const;
};

// Interleaves the quadruple into F = A I + iB sx + iC sy + iD sz, placing the
// z^l coefficient at w^{2l}. Throws NotUnitaryError when the sampled
// F F^dagger deviates from the identity by more than 1e-6, which means the
// completion upstream went wrong.
MatrixCoefficientList assemble_matrix_poly(const CompletedQuadruple& q);

// Rank-1 projector, stored as the unit vector it projects onto.
struct Projector {
    cplx v0, v1;

    Mat2 matrix() const;
};

// Dominant right singular direction of lead, as a projector. For an exactly
// rank-1 lead this is lead^dagger lead scaled to unit trace. Throws
// LeadTooSmallError (carrying step) when the norm of lead is at or below
// lead_threshold and extraction would just amplify noise.
Projector extract_projector(const Mat2& lead, double lead_threshold = 0.0,
                            int step = 0);

// Right-multiplies F by the inverse projector factor w p + w^{-1} (1 - p),
// the degree-reducing direction when p came from the lowest coefficient.
// The residues pushed outside the shrunken support are dropped; their
// operator norms are added to *truncated when the pointer is given.
MatrixCoefficientList peel(const MatrixCoefficientList& f, const Projector& p,
                           double* truncated = nullptr);

// Result of a full decomposition. Reconstruction multiplies
// e0 * prod_k (e^{-i theta/2} p_k + e^{i theta/2} (1 - p_k)) in list order.
// projectors.size() is twice the source degree unless negligible extreme
// coefficient pairs were dropped along the way, in which case it is smaller
// by twice the number of dropped pairs.
struct QspSequence {
    Mat2 e0 = mat2_identity();
    std::vector<Projector> projectors;
    double truncation_error = 0.0;
    int source_degree = 0;
};

// Peels F down to a constant, one projector per half-degree step, then snaps
// the remainder to its unitary polar factor. Extreme coefficient pairs whose
// norms sit at the round-off floor of the largest coefficient are dropped
// rather than peeled, since they carry no usable direction. All dropped mass,
// peel residues, and the final snap distance accumulate in truncation_error,
// which therefore bounds the sup-norm deviation between the reconstruction
// and the input.
QspSequence decompose(const MatrixCoefficientList& f);

// Circuit gate train [E0, V1, V1^dagger V2, ..., V_{K-1}^dagger V_K,
// V_K^dagger] where V_k maps the zero state to the k-th projector vector.
std::vector<Mat2> export_gates(const QspSequence& seq);

}  // namespace lqsp
