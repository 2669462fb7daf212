#pragma once

#include <cstddef>
#include <vector>

namespace synthcat {

// Minimal dense square matrix; big enough for correlation matrices over
// survey-scale column counts.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t dimension() const { return n_; }
    double& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

struct SymmetricEigen {
    std::vector<double> values; // ascending
    Matrix vectors;             // column j pairs with values[j]
};

// Cyclic Jacobi rotations; input must be symmetric.
SymmetricEigen symmetric_eigen(const Matrix& a);

// Lower-triangular factor L with L Lt = a, tolerant of positive
// semi-definite inputs: a pivot within tolerance of zero zeroes its column
// (rank-deficient direction); a clearly negative pivot is a numeric error.
Matrix psd_cholesky(const Matrix& a, double tolerance = 1e-9);

} // namespace synthcat
