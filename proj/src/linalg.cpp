#include "lqsp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lqsp/errors.hpp"

namespace lqsp {

void solve_linear_inplace(Matrix& a, std::vector<double>& b) {
    int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n) {
        throw DomainError("solve_linear needs a square system matching the rhs");
    }

    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        double pivot_mag = std::abs(a.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            double mag = std::abs(a.at(i, k));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = i;
            }
        }
        if (!(pivot_mag >= 1e-300)) {
            throw SingularMatrixError("pivot " + std::to_string(pivot_mag) +
                                      " at column " + std::to_string(k));
        }
        if (pivot_row != k) {
            std::swap_ranges(a.row(k), a.row(k) + n, a.row(pivot_row));
            std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(pivot_row)]);
        }

        const double* rk = a.row(k);
        for (int i = k + 1; i < n; ++i) {
            double* ri = a.row(i);
            double l = ri[k] / rk[k];
            if (l == 0.0) continue;
            ri[k] = l;
            for (int j = k + 1; j < n; ++j) {
                ri[j] -= l * rk[j];
            }
            b[static_cast<size_t>(i)] -= l * b[static_cast<size_t>(k)];
        }
    }

    // Back substitution on U.
    for (int i = n - 1; i >= 0; --i) {
        const double* ri = a.row(i);
        double s = b[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            s -= ri[j] * b[static_cast<size_t>(j)];
        }
        b[static_cast<size_t>(i)] = s / ri[i];
    }
}

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
    solve_linear_inplace(a, b);
    return b;
}

}  // namespace lqsp
