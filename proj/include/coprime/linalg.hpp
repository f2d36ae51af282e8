#pragma once

// Small dense symmetric linear algebra: just enough for the SDP solver.

#include <cstddef>
#include <vector>

namespace coprime::linalg {

// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }
    double* row(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }
    const double* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }

    bool operator==(const Matrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

double frobenius_norm(const Matrix& m);
double trace(const Matrix& m);
double entry_sum(const Matrix& m);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // orthonormal columns, M = V diag(values) V^T
};

// Cyclic Jacobi for symmetric matrices. Sweeps until the off-diagonal
// Frobenius norm is below 1e-12 (scaled by ||M||_F when that exceeds 1).
// Throws std::invalid_argument when max |M_ij - M_ji| > 1e-10.
EigenDecomposition symmetric_eigendecomposition(const Matrix& m);

// Euclidean projection onto the PSD cone: eigenvalues clipped at zero.
Matrix project_psd(const Matrix& m);

}  // namespace coprime::linalg
