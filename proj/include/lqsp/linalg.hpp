#pragma once

#include <vector>

namespace lqsp {

// Dense row-major matrix of doubles, sized once at construction.
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& at(int i, int j) {
        return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) +
                     static_cast<size_t>(j)];
    }
    double at(int i, int j) const {
        return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) +
                     static_cast<size_t>(j)];
    }

    double* row(int i) {
        return data_.data() + static_cast<size_t>(i) * static_cast<size_t>(cols_);
    }
    const double* row(int i) const {
        return data_.data() + static_cast<size_t>(i) * static_cast<size_t>(cols_);
    }

private:
    int rows_;
    int cols_;
    std::vector<double> data_;
};

// Solves A x = b in place by LU with partial pivoting; A is overwritten with
// the factors and b with the solution. Throws SingularMatrixError when the
// best available pivot is below 1e-300 in magnitude.
void solve_linear_inplace(Matrix& a, std::vector<double>& b);

// Copying convenience wrapper around solve_linear_inplace.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

}  // namespace lqsp
