#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace randurv {

// Dense row-major matrix of doubles.  Construction zero-fills; element access
// is unchecked in release builds.  All library functions treat their matrix
// arguments as immutable values and return fresh results.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> values);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<double>& d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    double* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }

    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }

    // Copy of the nr x nc submatrix whose top-left corner is (i0, j0).
    Matrix block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const;

    bool all_finite() const noexcept;

    bool operator==(const Matrix& other) const noexcept;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// C = A * B.  Dimension mismatch throws std::invalid_argument.
Matrix gemm(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);

}  // namespace randurv
