#pragma once

#include <vector>

#include "randurv/matrix.hpp"

namespace randurv {

struct QrFactors {
    Matrix q;
    Matrix r;
};

struct QlFactors {
    Matrix q;
    Matrix l;
};

struct RqFactors {
    Matrix r;
    Matrix q;
};

// Householder QR of an m x n matrix with m >= n.  Q is m x m orthogonal, R is
// m x n upper triangular, and the signs are fixed so every diagonal entry of R
// is >= 0.  With that convention the factorization of a full-rank matrix is
// unique, and Q of a Gaussian matrix is Haar distributed.
QrFactors householder_qr(const Matrix& a);

// QL factorization of a square matrix (L lower triangular, diagonal >= 0),
// computed by reversing rows and columns and reusing householder_qr.
QlFactors ql_decompose(const Matrix& a);

// RQ factorization of a square matrix (R upper triangular, diagonal >= 0),
// computed from the QL factorization of the transpose.
RqFactors rq_decompose(const Matrix& a);

// Solves R X = B with R square upper triangular.  A diagonal entry with
// magnitude below 1e-300 raises SingularError carrying its index.
Matrix solve_upper_triangular(const Matrix& r, const Matrix& b);

// Solves X R = B with R square upper triangular (right division), same
// singularity contract as solve_upper_triangular.
Matrix right_solve_upper_triangular(const Matrix& b, const Matrix& r);

// Singular values of an m x n matrix with m >= n, in descending order,
// computed with the one-sided Jacobi method (cyclic sweeps over column pairs,
// rotation threshold 1e-15 relative, 30-sweep cap, non-convergence raises
// ConvergenceError carrying the largest remaining normalized off-diagonal).
std::vector<double> jacobi_svd_values(const Matrix& a);

// Largest singular value via power iteration on A^T A from a fixed internal
// starting vector (relative tolerance 1e-12, iteration cap 10000).  The zero
// matrix returns exactly 0.
double spectral_norm(const Matrix& a);

}  // namespace randurv
