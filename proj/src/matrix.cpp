#include "randurv/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace randurv {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> values)
    : rows_(rows), cols_(cols), data_(values) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("Matrix: initializer size does not match dimensions");
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
    if (i0 + nr > rows_ || j0 + nc > cols_) {
        throw std::invalid_argument("Matrix::block: submatrix out of range");
    }
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        const double* src = row(i0 + i) + j0;
        double* dst = out.row(i);
        for (std::size_t j = 0; j < nc; ++j) dst[j] = src[j];
    }
    return out;
}

bool Matrix::all_finite() const noexcept {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

bool Matrix::operator==(const Matrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix gemm(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("gemm: inner dimensions do not match");
    }
    Matrix c(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* crow = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* brow = b.row(k);
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* arow = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = arow[j];
    }
    return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("add: dimensions do not match");
    }
    Matrix c(a.rows(), a.cols());
    const double* pa = a.data();
    const double* pb = b.data();
    double* pc = c.data();
    const std::size_t total = a.rows() * a.cols();
    for (std::size_t i = 0; i < total; ++i) pc[i] = pa[i] + pb[i];
    return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("subtract: dimensions do not match");
    }
    Matrix c(a.rows(), a.cols());
    const double* pa = a.data();
    const double* pb = b.data();
    double* pc = c.data();
    const std::size_t total = a.rows() * a.cols();
    for (std::size_t i = 0; i < total; ++i) pc[i] = pa[i] - pb[i];
    return c;
}

Matrix scale(const Matrix& a, double s) {
    Matrix c(a.rows(), a.cols());
    const double* pa = a.data();
    double* pc = c.data();
    const std::size_t total = a.rows() * a.cols();
    for (std::size_t i = 0; i < total; ++i) pc[i] = s * pa[i];
    return c;
}

double frobenius_norm(const Matrix& a) {
    // Scaled accumulation so that norms of matrices with huge entries do not
    // overflow before the square root.
    double maxv = max_abs(a);
    if (maxv == 0.0) return 0.0;
    double sum = 0.0;
    const double* p = a.data();
    const std::size_t total = a.rows() * a.cols();
    for (std::size_t i = 0; i < total; ++i) {
        const double v = p[i] / maxv;
        sum += v * v;
    }
    return maxv * std::sqrt(sum);
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    const double* p = a.data();
    const std::size_t total = a.rows() * a.cols();
    for (std::size_t i = 0; i < total; ++i) {
        const double v = std::fabs(p[i]);
        if (v > m) m = v;
    }
    return m;
}

}  // namespace randurv
