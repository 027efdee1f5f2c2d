#pragma once

#include <string>

#include "lqsp/decompose.hpp"
#include "lqsp/targets.hpp"

namespace lqsp {

// Measurement basis for turning the reconstructed matrix into a scalar.
// plus reads <+|U|+> (the average of all four entries), zero reads <0|U|0>
// (the top-left entry).
enum class Basis { plus, zero };

struct VerificationReport {
    double eps_qsp = 0.0;        // max pointwise error over the grid
    double worst_theta = 0.0;    // grid angle where the max was attained
    int grid_points = 0;
    Basis basis = Basis::plus;
    std::string per_point_csv;   // path of the per-point dump, empty if none
    double elapsed_seconds = 0.0;
};

// Value of the projector sequence at angle theta: the constant unitary
// followed by one factor exp(-i theta/2) p + exp(+i theta/2) (1 - p) per
// projector.
Mat2 reconstruct(const QspSequence& seq, double theta);

// Scalar expectation of the reconstruction in the given basis.
cplx qsp_value(const QspSequence& seq, double theta, Basis basis = Basis::plus);

// Compares the sequence against the target pair on a uniform theta grid over
// [0, 2pi) and reports the worst deviation |qsp_value - (A + iB)|.
// grid_points 0 picks 8 * (2 * source_degree + 1); an explicit grid below
// 4 * (2 * source_degree + 1) cannot resolve the polynomial and is rejected.
// When per_point_csv is nonempty, one row per grid point is written there.
VerificationReport verify_sequence(const QspSequence& seq,
                                   const TargetPair& target,
                                   int grid_points = 0,
                                   Basis basis = Basis::plus,
                                   const std::string& per_point_csv = "");

}  // namespace lqsp
