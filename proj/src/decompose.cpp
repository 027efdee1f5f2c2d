#include "lqsp/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lqsp/errors.hpp"

namespace lqsp {

Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Mat2 operator*(cplx s, const Mat2& a) {
    return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}

Mat2 adjoint(const Mat2& a) {
    return {std::conj(a.m00), std::conj(a.m10), std::conj(a.m01), std::conj(a.m11)};
}

Mat2 mat2_identity() {
    return {cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0)};
}

double operator_norm(const Mat2& a) {
    // Largest singular value via the eigenvalues of a^dagger a.
    double tr = std::norm(a.m00) + std::norm(a.m01) + std::norm(a.m10) +
                std::norm(a.m11);
    double det = std::norm(a.m00 * a.m11 - a.m01 * a.m10);
    double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return std::sqrt(0.5 * (tr + disc));
}

namespace {

struct HermitianEigen {
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    cplx v0, v1;  // unit eigenvector of lambda_max
};

// Closed-form eigensystem of the Hermitian matrix [[h00, h01], [h01*, h11]].
// The eigenvector of the larger eigenvalue is picked from the better
// conditioned of the two analytic candidates.
HermitianEigen hermitian_eigen(double h00, double h11, cplx h01) {
    double diff = h00 - h11;
    double disc = std::sqrt(diff * diff + 4.0 * std::norm(h01));
    HermitianEigen e;
    e.lambda_max = 0.5 * (h00 + h11 + disc);
    e.lambda_min = 0.5 * (h00 + h11 - disc);

    cplx cand_a0 = h01;
    double cand_a1 = e.lambda_max - h00;
    double cand_b0 = e.lambda_max - h11;
    cplx cand_b1 = std::conj(h01);
    double na = std::norm(cand_a0) + cand_a1 * cand_a1;
    double nb = cand_b0 * cand_b0 + std::norm(cand_b1);
    if (na >= nb) {
        if (na == 0.0) {
            // Multiple of the identity; any direction is dominant.
            e.v0 = cplx(1.0, 0.0);
            e.v1 = cplx(0.0, 0.0);
            return e;
        }
        double inv = 1.0 / std::sqrt(na);
        e.v0 = inv * cand_a0;
        e.v1 = cplx(inv * cand_a1, 0.0);
    } else {
        double inv = 1.0 / std::sqrt(nb);
        e.v0 = cplx(inv * cand_b0, 0.0);
        e.v1 = inv * cand_b1;
    }
    return e;
}

// Compensated double-double scalars for the peel recursion. Peeling is a
// long chain of 2x2 multiply-adds whose rounding errors feed back through
// coefficients hundreds of times smaller than their neighbours, so plain
// doubles lose several digits per hundred steps. Carrying an error term
// (Dekker / Knuth two-sum, fma-based two-prod) keeps the recursion at about
// thirty significant digits at a small constant cost; every value is still a
// pair of hardware doubles, evaluated deterministically.
struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD dd_from(double x) { return {x, 0.0}; }
inline double dd_value(DD x) { return x.hi + x.lo; }

inline DD two_sum(double a, double b) {
    double s = a + b;
    double t = s - a;
    double e = (a - (s - t)) + (b - t);
    return {s, e};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return {p, e};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    double e = s.lo + a.lo + b.lo;
    double hi = s.hi + e;
    return {hi, e - (hi - s.hi)};
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    double e = p.lo + a.hi * b.lo + a.lo * b.hi;
    double hi = p.hi + e;
    return {hi, e - (hi - p.hi)};
}

struct DDComplex {
    DD re, im;
};

inline DDComplex ddc_from(cplx z) {
    return {dd_from(z.real()), dd_from(z.imag())};
}
inline cplx ddc_value(DDComplex z) { return {dd_value(z.re), dd_value(z.im)}; }

inline DDComplex ddc_add(DDComplex a, DDComplex b) {
    return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline DDComplex ddc_mul(DDComplex a, DDComplex b) {
    DD re = dd_add(dd_mul(a.re, b.re),
                   dd_mul(dd_from(-1.0), dd_mul(a.im, b.im)));
    DD im = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
    return {re, im};
}

// 2x2 complex matrix over double-double scalars, row major like Mat2.
struct Mat2DD {
    DDComplex m00, m01, m10, m11;
};

inline Mat2DD mat2dd_from(const Mat2& a) {
    return {ddc_from(a.m00), ddc_from(a.m01), ddc_from(a.m10), ddc_from(a.m11)};
}

inline Mat2 mat2dd_value(const Mat2DD& a) {
    return {ddc_value(a.m00), ddc_value(a.m01), ddc_value(a.m10),
            ddc_value(a.m11)};
}

inline Mat2DD mat2dd_mul(const Mat2DD& a, const Mat2DD& b) {
    return {ddc_add(ddc_mul(a.m00, b.m00), ddc_mul(a.m01, b.m10)),
            ddc_add(ddc_mul(a.m00, b.m01), ddc_mul(a.m01, b.m11)),
            ddc_add(ddc_mul(a.m10, b.m00), ddc_mul(a.m11, b.m10)),
            ddc_add(ddc_mul(a.m10, b.m01), ddc_mul(a.m11, b.m11))};
}

inline Mat2DD mat2dd_add(const Mat2DD& a, const Mat2DD& b) {
    return {ddc_add(a.m00, b.m00), ddc_add(a.m01, b.m01),
            ddc_add(a.m10, b.m10), ddc_add(a.m11, b.m11)};
}

// Eigensystem of the Gram matrix a^dagger a, whose dominant eigenvector is
// the dominant right singular direction of a.
HermitianEigen gram_eigen(const Mat2& a) {
    return hermitian_eigen(std::norm(a.m00) + std::norm(a.m10),
                           std::norm(a.m01) + std::norm(a.m11),
                           std::conj(a.m00) * a.m01 + std::conj(a.m10) * a.m11);
}

// One factor extraction decision: the direction and whether the factor comes
// off the left or the right of the matrix product.
struct PeelChoice {
    Projector p;
    bool left = false;
    double discard = 0.0;  // mass the corresponding fold would drop
};

// Picks the peel direction from both extreme coefficients at once. For a
// factor removed on the right, the exact direction is simultaneously the
// dominant right singular direction of the bottom coefficient and the null
// direction of the top one, so it maximises the quadratic form
// front^dagger front - back^dagger back; a factor removed on the left works
// the same way with row spaces, i.e. with the Gram difference
// front front^dagger - back back^dagger. Using both edges keeps the
// extraction conditioned by whichever edge is larger, which matters once one
// edge has decayed into round-off while the other is still healthy. Between
// the two sides the one whose fold drops less mass wins: extraction errors
// compound along the chain of removed factors, and consuming the product
// from both ends splits that chain into two shorter halves.
PeelChoice choose_peel(const Mat2& front, const Mat2& back, int step) {
    double nf = operator_norm(front);
    double nb = operator_norm(back);
    double s = std::max(nf, nb);
    if (!(s > 0.0)) {
        throw LeadTooSmallError(
            "both extreme coefficients vanish at step " + std::to_string(step),
            step);
    }
    // Normalise before squaring so edges near the underflow limit still
    // produce a finite Gram difference.
    cplx inv(1.0 / s, 0.0);
    Mat2 f = inv * front;
    Mat2 b = inv * back;

    // Right: columnwise Gram difference f^dagger f - b^dagger b.
    double r00 = std::norm(f.m00) + std::norm(f.m10) - std::norm(b.m00) -
                 std::norm(b.m10);
    double r11 = std::norm(f.m01) + std::norm(f.m11) - std::norm(b.m01) -
                 std::norm(b.m11);
    cplx r01 = std::conj(f.m00) * f.m01 + std::conj(f.m10) * f.m11 -
               std::conj(b.m00) * b.m01 - std::conj(b.m10) * b.m11;
    HermitianEigen er = hermitian_eigen(r00, r11, r01);
    Projector pr{er.v0, er.v1};

    // Left: rowwise Gram difference f f^dagger - b b^dagger.
    double l00 = std::norm(f.m00) + std::norm(f.m01) - std::norm(b.m00) -
                 std::norm(b.m01);
    double l11 = std::norm(f.m10) + std::norm(f.m11) - std::norm(b.m10) -
                 std::norm(b.m11);
    cplx l01 = f.m00 * std::conj(f.m10) + f.m01 * std::conj(f.m11) -
               b.m00 * std::conj(b.m10) - b.m01 * std::conj(b.m11);
    HermitianEigen el = hermitian_eigen(l00, l11, l01);
    Projector pl{el.v0, el.v1};

    Mat2 prm = pr.matrix();
    Mat2 qrm = mat2_identity() - prm;
    double dr = operator_norm(front * qrm) + operator_norm(back * prm);

    Mat2 plm = pl.matrix();
    Mat2 qlm = mat2_identity() - plm;
    double dl = operator_norm(qlm * front) + operator_norm(plm * back);

    // Strict alternation, not the smaller immediate discard: an edge decayed
    // into round-off offers a deceptively small discard, so a myopic choice
    // would keep consuming the degenerate side and strand the healthy one.
    if (step % 2 == 1) {
        return {pl, true, dl};
    }
    return {pr, false, dr};
}

}  // namespace

Mat2 polar_unitary(const Mat2& a) {
    HermitianEigen e = gram_eigen(a);
    double s1 = std::sqrt(std::max(0.0, e.lambda_max));
    if (s1 == 0.0) {
        return mat2_identity();
    }

    // Right singular vectors: dominant direction and its orthogonal
    // complement, which is exactly orthonormal by construction.
    cplx w0 = -std::conj(e.v1);
    cplx w1 = std::conj(e.v0);

    // Left singular vectors u_i = a v_i / s_i; a collapsed second direction
    // is completed orthogonally instead of divided out.
    cplx u10 = (a.m00 * e.v0 + a.m01 * e.v1) / s1;
    cplx u11 = (a.m10 * e.v0 + a.m11 * e.v1) / s1;
    double s2 = std::sqrt(std::max(0.0, e.lambda_min));
    cplx u20, u21;
    if (s2 > 1e-8 * s1) {
        u20 = (a.m00 * w0 + a.m01 * w1) / s2;
        u21 = (a.m10 * w0 + a.m11 * w1) / s2;
    } else {
        u20 = -std::conj(u11);
        u21 = std::conj(u10);
    }

    // U = u1 v1^dagger + u2 v2^dagger.
    return {u10 * std::conj(e.v0) + u20 * std::conj(w0),
            u10 * std::conj(e.v1) + u20 * std::conj(w1),
            u11 * std::conj(e.v0) + u21 * std::conj(w0),
            u11 * std::conj(e.v1) + u21 * std::conj(w1)};
}

Mat2 MatrixCoefficientList::eval(double theta) const {
    // Horner in z = w^2, then one overall factor w^{-half_degree}.
    cplx z = std::polar(1.0, theta);
    Mat2 acc = {cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
    for (size_t t = coeffs.size(); t-- > 0;) {
        acc = z * acc + coeffs[t];
    }
    cplx swing = std::polar(1.0, -0.5 * theta * static_cast<double>(half_degree));
    return swing * acc;
}

MatrixCoefficientList assemble_matrix_poly(const CompletedQuadruple& q) {
    int n = std::max(std::max(q.a.degree(), q.b.degree()),
                     std::max(q.c.degree(), q.d.degree()));
    MatrixCoefficientList out;
    out.half_degree = 2 * n;
    out.coeffs.resize(static_cast<size_t>(2 * n) + 1);
    const cplx i_unit(0.0, 1.0);
    for (int l = -n; l <= n; ++l) {
        cplx al = q.a.coeff(l);
        cplx bl = q.b.coeff(l);
        cplx cl = q.c.coeff(l);
        cplx dl = q.d.coeff(l);
        out.coeffs[static_cast<size_t>(l + n)] = {al + i_unit * dl, i_unit * bl + cl,
                                                  i_unit * bl - cl, al - i_unit * dl};
    }

    int grid = std::max(4 * out.half_degree, 8);
    double worst = 0.0;
    for (int j = 0; j < grid; ++j) {
        double theta = 2.0 * M_PI * j / grid;
        Mat2 value = out.eval(theta);
        Mat2 defect = value * adjoint(value) - mat2_identity();
        worst = std::max(worst, operator_norm(defect));
    }
    out.eps_coeff = worst;
    if (worst > 1e-6) {
        throw NotUnitaryError("assembled matrix polynomial deviates from unitarity by " +
                              std::to_string(worst));
    }
    return out;
}

Mat2 Projector::matrix() const {
    return {v0 * std::conj(v0), v0 * std::conj(v1), v1 * std::conj(v0),
            v1 * std::conj(v1)};
}

Projector extract_projector(const Mat2& lead, double lead_threshold, int step) {
    if (!(operator_norm(lead) > lead_threshold)) {
        throw LeadTooSmallError("leading coefficient norm " +
                                    std::to_string(operator_norm(lead)) +
                                    " is below the extraction threshold at step " +
                                    std::to_string(step),
                                step);
    }
    HermitianEigen e = gram_eigen(lead);
    return {e.v0, e.v1};
}

MatrixCoefficientList peel(const MatrixCoefficientList& f, const Projector& p,
                           double* truncated) {
    if (f.half_degree < 1) {
        throw DomainError("a constant matrix polynomial has nothing to peel");
    }
    Mat2 pm = p.matrix();
    Mat2 qm = mat2_identity() - pm;

    MatrixCoefficientList out;
    out.half_degree = f.half_degree - 1;
    out.eps_coeff = f.eps_coeff;
    out.coeffs.resize(static_cast<size_t>(out.half_degree) + 1);
    for (size_t t = 0; t < out.coeffs.size(); ++t) {
        out.coeffs[t] = f.coeffs[t] * pm + f.coeffs[t + 1] * qm;
    }
    if (truncated != nullptr) {
        *truncated += operator_norm(f.coeffs.front() * qm) +
                      operator_norm(f.coeffs.back() * pm);
    }
    return out;
}

QspSequence decompose(const MatrixCoefficientList& f) {
    QspSequence seq;
    seq.source_degree = f.half_degree / 2;

    double scale = 0.0;
    for (const Mat2& c : f.coeffs) {
        scale = std::max(scale, operator_norm(c));
    }
    const double trim_cut = 1e-16 * scale;

    // The recursion itself runs over double-double coefficients. Every peel
    // folds each coefficient into its neighbour, and the small extreme
    // coefficients of a long product sit orders of magnitude below the bulk,
    // so plain double rounding noise injected at the bulk scale contaminates
    // later lead directions and compounds across hundreds of steps. The
    // compensated representation keeps the folding error near 1e-32 relative
    // while the extracted projectors and all reported norms stay doubles.
    std::vector<Mat2DD> cur;
    cur.reserve(f.coeffs.size());
    for (const Mat2& c : f.coeffs) {
        cur.push_back(mat2dd_from(c));
    }
    std::vector<Projector> left_peeled;
    std::vector<Projector> right_peeled;
    left_peeled.reserve(static_cast<size_t>(f.half_degree));
    right_peeled.reserve(static_cast<size_t>(f.half_degree));

    // Completions of sharply truncated targets can leave extreme coefficients
    // that are pure round-off, or even exact zeros once the generator tail
    // underflows. Such a pair carries no direction information, so it is
    // dropped instead of peeled: the effective degree falls by two and the
    // discarded mass goes into the truncation ledger. Genuine sequence edges
    // decay exponentially with length as well (the lowest coefficient is a
    // product of adjacent projector overlaps), so the cut deliberately sits
    // at the round-off floor of the largest coefficient and no lower.
    auto trim_edges = [&]() {
        while (cur.size() >= 3) {
            double nf = operator_norm(mat2dd_value(cur.front()));
            double nb = operator_norm(mat2dd_value(cur.back()));
            if (nf > trim_cut || nb > trim_cut) {
                break;
            }
            seq.truncation_error += nf + nb;
            cur.erase(cur.begin());
            cur.pop_back();
        }
    };

    while (true) {
        trim_edges();
        if (cur.size() < 2) {
            break;
        }
        int step = static_cast<int>(left_peeled.size() + right_peeled.size());
        PeelChoice c = choose_peel(mat2dd_value(cur.front()),
                                   mat2dd_value(cur.back()), step);
        seq.truncation_error += c.discard;
        Mat2 pmd = c.p.matrix();
        Mat2 qmd = mat2_identity() - pmd;
        Mat2DD pm = mat2dd_from(pmd);
        Mat2DD qm = mat2dd_from(qmd);
        if (c.left) {
            for (size_t t = 0; t + 1 < cur.size(); ++t) {
                cur[t] = mat2dd_add(mat2dd_mul(pm, cur[t]),
                                    mat2dd_mul(qm, cur[t + 1]));
            }
            left_peeled.push_back(c.p);
        } else {
            for (size_t t = 0; t + 1 < cur.size(); ++t) {
                cur[t] = mat2dd_add(mat2dd_mul(cur[t], pm),
                                    mat2dd_mul(cur[t + 1], qm));
            }
            right_peeled.push_back(c.p);
        }
        cur.pop_back();
    }

    Mat2 remainder = mat2dd_value(cur.front());
    seq.e0 = polar_unitary(remainder);
    seq.truncation_error += operator_norm(seq.e0 - remainder);

    // The peels recover the product as L_1 .. L_a E0 R_b .. R_1, with left
    // factors in extraction order outermost first and right factors
    // innermost last. Conjugating each left factor through E0 restores the
    // canonical form E0 (E0^dagger L_i E0) .. R_1: conjugating a factor by a
    // unitary conjugates its projector, so the published sequence is the
    // conjugated left projectors in extraction order followed by the right
    // projectors in reverse extraction order.
    Mat2 e0adj = adjoint(seq.e0);
    seq.projectors.reserve(left_peeled.size() + right_peeled.size());
    for (const Projector& p : left_peeled) {
        cplx w0 = e0adj.m00 * p.v0 + e0adj.m01 * p.v1;
        cplx w1 = e0adj.m10 * p.v0 + e0adj.m11 * p.v1;
        seq.projectors.push_back({w0, w1});
    }
    seq.projectors.insert(seq.projectors.end(), right_peeled.rbegin(),
                          right_peeled.rend());
    return seq;
}

std::vector<Mat2> export_gates(const QspSequence& seq) {
    auto v_of = [](const Projector& p) -> Mat2 {
        return {p.v0, -std::conj(p.v1), p.v1, std::conj(p.v0)};
    };

    std::vector<Mat2> gates;
    gates.reserve(seq.projectors.size() + 2);
    gates.push_back(seq.e0);
    for (size_t k = 0; k < seq.projectors.size(); ++k) {
        Mat2 v = v_of(seq.projectors[k]);
        if (k == 0) {
            gates.push_back(v);
        } else {
            gates.push_back(adjoint(v_of(seq.projectors[k - 1])) * v);
        }
    }
    if (!seq.projectors.empty()) {
        gates.push_back(adjoint(v_of(seq.projectors.back())));
    }
    return gates;
}

}  // namespace lqsp
