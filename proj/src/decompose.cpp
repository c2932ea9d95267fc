#include "randurv/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "randurv/error.hpp"

namespace randurv {

namespace {

void require_finite(const Matrix& a, const char* who) {
    if (!a.all_finite()) {
        throw std::invalid_argument(std::string(who) + ": input has non-finite entries");
    }
}

// Deterministic starting vector for the power iteration, independent of any
// caller-visible RNG stream.
double hash_unit(std::uint64_t i) {
    std::uint64_t z = i + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
}

}  // namespace

QrFactors householder_qr(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m == 0 || n == 0 || m < n) {
        throw std::invalid_argument("householder_qr: requires m >= n >= 1");
    }
    require_finite(a, "householder_qr");

    Matrix r = a;
    Matrix qt = Matrix::identity(m);  // accumulates Q^T as reflectors are applied
    std::vector<double> v(m);
    std::vector<double> w(std::max(m, n));

    for (std::size_t j = 0; j < n; ++j) {
        double sigma = 0.0;
        for (std::size_t i = j + 1; i < m; ++i) sigma += r(i, j) * r(i, j);
        const double alpha = r(j, j);
        if (sigma == 0.0) continue;  // column already triangular, reflector is identity

        const double beta = -std::copysign(std::sqrt(alpha * alpha + sigma), alpha);
        const double v0 = alpha - beta;
        const double tau = -v0 / beta;
        v[j] = 1.0;
        for (std::size_t i = j + 1; i < m; ++i) v[i] = r(i, j) / v0;

        // Apply H = I - tau v v^T to the trailing columns of R.
        std::fill(w.begin() + j + 1, w.begin() + n, 0.0);
        for (std::size_t i = j; i < m; ++i) {
            const double vi = v[i];
            const double* rrow = r.row(i);
            for (std::size_t c = j + 1; c < n; ++c) w[c] += vi * rrow[c];
        }
        for (std::size_t i = j; i < m; ++i) {
            const double tvi = tau * v[i];
            double* rrow = r.row(i);
            for (std::size_t c = j + 1; c < n; ++c) rrow[c] -= tvi * w[c];
        }
        r(j, j) = beta;
        for (std::size_t i = j + 1; i < m; ++i) r(i, j) = 0.0;

        // Apply the same reflector to the accumulated Q^T.
        std::fill(w.begin(), w.begin() + m, 0.0);
        for (std::size_t i = j; i < m; ++i) {
            const double vi = v[i];
            const double* qrow = qt.row(i);
            for (std::size_t c = 0; c < m; ++c) w[c] += vi * qrow[c];
        }
        for (std::size_t i = j; i < m; ++i) {
            const double tvi = tau * v[i];
            double* qrow = qt.row(i);
            for (std::size_t c = 0; c < m; ++c) qrow[c] -= tvi * w[c];
        }
    }

    // Sign convention: diagonal of R is nonnegative.  Flipping row i of R
    // together with column i of Q (= row i of Q^T) preserves the product.
    for (std::size_t i = 0; i < n; ++i) {
        if (r(i, i) < 0.0) {
            double* rrow = r.row(i);
            for (std::size_t c = i; c < n; ++c) rrow[c] = -rrow[c];
            double* qrow = qt.row(i);
            for (std::size_t c = 0; c < m; ++c) qrow[c] = -qrow[c];
        } else if (r(i, i) == 0.0) {
            r(i, i) = 0.0;  // normalize a possible -0
        }
    }

    return {transpose(qt), r};
}

QlFactors ql_decompose(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n) {
        throw std::invalid_argument("ql_decompose: requires a square matrix");
    }
    // Reverse rows and columns, factor, and reverse back: with J the exchange
    // matrix, A = Q L  <=>  J A J = (J Q J)(J L J) and J L J is upper
    // triangular, so householder_qr does the work.
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) b(i, j) = a(n - 1 - i, n - 1 - j);
    }
    QrFactors f = householder_qr(b);
    QlFactors out;
    out.q = Matrix(n, n);
    out.l = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.q(i, j) = f.q(n - 1 - i, n - 1 - j);
            out.l(i, j) = f.r(n - 1 - i, n - 1 - j);
        }
    }
    return out;
}

RqFactors rq_decompose(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n) {
        throw std::invalid_argument("rq_decompose: requires a square matrix");
    }
    // A^T = Q_l L  =>  A = L^T Q_l^T with L^T upper triangular.
    QlFactors f = ql_decompose(transpose(a));
    return {transpose(f.l), transpose(f.q)};
}

Matrix solve_upper_triangular(const Matrix& r, const Matrix& b) {
    const std::size_t n = r.rows();
    if (r.cols() != n) {
        throw std::invalid_argument("solve_upper_triangular: R must be square");
    }
    if (b.rows() != n) {
        throw std::invalid_argument("solve_upper_triangular: dimension mismatch");
    }
    const std::size_t m = b.cols();
    Matrix x(n, m);
    for (std::size_t ii = n; ii-- > 0;) {
        const double d = r(ii, ii);
        if (std::fabs(d) < 1e-300) {
            std::ostringstream msg;
            msg << "solve_upper_triangular: singular diagonal at index " << ii;
            throw SingularError(msg.str(), ii);
        }
        double* xrow = x.row(ii);
        const double* brow = b.row(ii);
        for (std::size_t j = 0; j < m; ++j) xrow[j] = brow[j];
        const double* rrow = r.row(ii);
        for (std::size_t k = ii + 1; k < n; ++k) {
            const double rik = rrow[k];
            if (rik == 0.0) continue;
            const double* xk = x.row(k);
            for (std::size_t j = 0; j < m; ++j) xrow[j] -= rik * xk[j];
        }
        for (std::size_t j = 0; j < m; ++j) xrow[j] /= d;
    }
    return x;
}

Matrix right_solve_upper_triangular(const Matrix& b, const Matrix& r) {
    const std::size_t n = r.rows();
    if (r.cols() != n) {
        throw std::invalid_argument("right_solve_upper_triangular: R must be square");
    }
    if (b.cols() != n) {
        throw std::invalid_argument("right_solve_upper_triangular: dimension mismatch");
    }
    const std::size_t m = b.rows();
    Matrix x(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double d = r(j, j);
        if (std::fabs(d) < 1e-300) {
            std::ostringstream msg;
            msg << "right_solve_upper_triangular: singular diagonal at index " << j;
            throw SingularError(msg.str(), j);
        }
        for (std::size_t i = 0; i < m; ++i) {
            double acc = b(i, j);
            const double* xrow = x.row(i);
            for (std::size_t k = 0; k < j; ++k) acc -= xrow[k] * r(k, j);
            x(i, j) = acc / d;
        }
    }
    return x;
}

std::vector<double> jacobi_svd_values(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m == 0 || n == 0 || m < n) {
        throw std::invalid_argument("jacobi_svd_values: requires m >= n >= 1");
    }
    require_finite(a, "jacobi_svd_values");

    // One-sided Jacobi on the rows of W = A^T: orthogonalizing the rows of W
    // is orthogonalizing the columns of A, and rows are contiguous here.
    Matrix w = transpose(a);
    const double tol = 1e-15;
    const int max_sweeps = 30;
    bool converged = (n == 1);

    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double* wi = w.row(i);
                double* wj = w.row(j);
                double aii = 0.0, ajj = 0.0, aij = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    aii += wi[k] * wi[k];
                    ajj += wj[k] * wj[k];
                    aij += wi[k] * wj[k];
                }
                if (aii == 0.0 || ajj == 0.0) continue;
                if (std::fabs(aij) <= tol * std::sqrt(aii) * std::sqrt(ajj)) continue;

                const double zeta = (ajj - aii) / (2.0 * aij);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (std::size_t k = 0; k < m; ++k) {
                    const double wik = wi[k];
                    wi[k] = cs * wik - sn * wj[k];
                    wj[k] = sn * wik + cs * wj[k];
                }
                rotated = true;
            }
        }
        if (!rotated) converged = true;
    }

    if (!converged) {
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double* wi = w.row(i);
                const double* wj = w.row(j);
                double aii = 0.0, ajj = 0.0, aij = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    aii += wi[k] * wi[k];
                    ajj += wj[k] * wj[k];
                    aij += wi[k] * wj[k];
                }
                if (aii == 0.0 || ajj == 0.0) continue;
                const double rel = std::fabs(aij) / (std::sqrt(aii) * std::sqrt(ajj));
                if (rel > worst) worst = rel;
            }
        }
        if (worst > tol) {
            throw ConvergenceError("jacobi_svd_values: no convergence in 30 sweeps", worst);
        }
    }

    std::vector<double> sv(n);
    for (std::size_t i = 0; i < n; ++i) {
        double maxv = 0.0;
        const double* wi = w.row(i);
        for (std::size_t k = 0; k < m; ++k) {
            const double av = std::fabs(wi[k]);
            if (av > maxv) maxv = av;
        }
        if (maxv == 0.0) {
            sv[i] = 0.0;
            continue;
        }
        double sum = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double v = wi[k] / maxv;
            sum += v * v;
        }
        sv[i] = maxv * std::sqrt(sum);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

double spectral_norm(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) {
        throw std::invalid_argument("spectral_norm: empty matrix");
    }
    require_finite(a, "spectral_norm");
    if (max_abs(a) == 0.0) return 0.0;

    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<double> v(n), u(m);
    double vnorm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        v[j] = hash_unit(j);
        vnorm += v[j] * v[j];
    }
    vnorm = std::sqrt(vnorm);
    for (std::size_t j = 0; j < n; ++j) v[j] /= vnorm;

    double sigma_prev = 0.0;
    for (int it = 0; it < 10000; ++it) {
        // u = A v
        double unorm2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double* arow = a.row(i);
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += arow[j] * v[j];
            u[i] = acc;
            unorm2 += acc * acc;
        }
        const double sigma = std::sqrt(unorm2);
        if (sigma == 0.0) {
            // v landed in the null space; perturb deterministically and retry.
            double nn = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                v[j] = hash_unit(j + static_cast<std::uint64_t>(it + 1) * 7919u);
                nn += v[j] * v[j];
            }
            nn = std::sqrt(nn);
            for (std::size_t j = 0; j < n; ++j) v[j] /= nn;
            continue;
        }
        // v = A^T u, normalized
        std::fill(v.begin(), v.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            const double ui = u[i];
            const double* arow = a.row(i);
            for (std::size_t j = 0; j < n; ++j) v[j] += ui * arow[j];
        }
        double vn = 0.0;
        for (std::size_t j = 0; j < n; ++j) vn += v[j] * v[j];
        vn = std::sqrt(vn);
        if (vn == 0.0) return sigma;
        for (std::size_t j = 0; j < n; ++j) v[j] /= vn;

        if (std::fabs(sigma - sigma_prev) <= 1e-12 * sigma) return sigma;
        sigma_prev = sigma;
    }
    return sigma_prev;
}

}  // namespace randurv
