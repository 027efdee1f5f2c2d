#include "lqsp/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>

#include "lqsp/errors.hpp"
#include "lqsp/format.hpp"

namespace lqsp {

Mat2 reconstruct(const QspSequence& seq, double theta) {
    const cplx wp = std::polar(1.0, -0.5 * theta);
    const cplx wq = std::conj(wp);
    Mat2 m = seq.e0;
    for (const Projector& p : seq.projectors) {
        // wp * P + wq * (I - P) written as wq * I + (wp - wq) * P so the
        // projector matrix is applied once.
        const cplx d = wp - wq;
        const cplx p00 = std::conj(p.v0) * p.v0;
        const cplx p01 = std::conj(p.v1) * p.v0;
        const cplx p10 = std::conj(p.v0) * p.v1;
        const cplx p11 = std::conj(p.v1) * p.v1;
        const Mat2 factor{wq + d * p00, d * p01, d * p10, wq + d * p11};
        m = m * factor;
    }
    return m;
}

cplx qsp_value(const QspSequence& seq, double theta, Basis basis) {
    const Mat2 m = reconstruct(seq, theta);
    if (basis == Basis::zero) return m.m00;
    return 0.5 * (m.m00 + m.m01 + m.m10 + m.m11);
}

VerificationReport verify_sequence(const QspSequence& seq,
                                   const TargetPair& target, int grid_points,
                                   Basis basis,
                                   const std::string& per_point_csv) {
    const int n = seq.source_degree;
    const int minimum = 4 * (2 * n + 1);
    int grid = grid_points;
    if (grid == 0) grid = 8 * (2 * n + 1);
    if (grid < minimum)
        throw GridTooCoarseError("verification grid of " +
                                 std::to_string(grid) +
                                 " points cannot resolve degree " +
                                 std::to_string(n) + ", need at least " +
                                 std::to_string(minimum));

    std::ofstream csv;
    if (!per_point_csv.empty()) {
        csv.open(per_point_csv);
        if (!csv)
            throw Error("cannot open " + per_point_csv + " for writing");
        csv << "theta,target_re,target_im,qsp_re,qsp_im,abs_err\n";
    }

    VerificationReport report;
    report.grid_points = grid;
    report.basis = basis;
    report.per_point_csv = per_point_csv;

    const auto start = std::chrono::steady_clock::now();
    for (int j = 0; j < grid; ++j) {
        const double theta = 2.0 * M_PI * j / grid;
        const cplx want =
            target.a.eval(theta) + cplx(0.0, 1.0) * target.b.eval(theta);
        const cplx got = qsp_value(seq, theta, basis);
        const double err = std::abs(got - want);
        if (err > report.eps_qsp) {
            report.eps_qsp = err;
            report.worst_theta = theta;
        }
        if (csv.is_open())
            csv << format_double(theta) << ',' << format_double(want.real())
                << ',' << format_double(want.imag()) << ','
                << format_double(got.real()) << ','
                << format_double(got.imag()) << ',' << format_double(err)
                << '\n';
    }
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_seconds =
        std::chrono::duration<double>(stop - start).count();

    if (csv.is_open()) {
        csv.close();
        if (!csv) throw Error("failed writing " + per_point_csv);
    }
    return report;
}

}  // namespace lqsp
