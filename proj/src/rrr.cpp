#include "randurv/rrr.hpp"

#include <stdexcept>

#include "randurv/decompose.hpp"

namespace randurv {

namespace {

void require_square_finite(const Matrix& a, const char* who) {
    if (a.rows() == 0 || a.rows() != a.cols()) {
        throw std::invalid_argument(std::string(who) + ": requires a square matrix");
    }
    if (!a.all_finite()) {
        throw std::invalid_argument(std::string(who) + ": input has non-finite entries");
    }
}

}  // namespace

RurvResult rurv(const Matrix& a, SeededRng& rng) {
    require_square_finite(a, "rurv");
    Matrix v = sample_haar_orthogonal(a.rows(), rng);
    Matrix sketched = gemm(a, transpose(v));
    QrFactors f = householder_qr(sketched);
    return {f.q, f.r, v};
}

RulvResult rulv(const Matrix& a, SeededRng& rng) {
    require_square_finite(a, "rulv");
    Matrix v = sample_haar_orthogonal(a.rows(), rng);
    Matrix sketched = gemm(a, transpose(v));
    QlFactors f = ql_decompose(sketched);
    return {f.q, f.l, v};
}

RSplit split_r(const Matrix& r_mat, std::size_t r) {
    const std::size_t n = r_mat.rows();
    if (n == 0 || r_mat.cols() != n) {
        throw std::invalid_argument("split_r: requires a square matrix");
    }
    if (r < 1 || r >= n) {
        throw std::invalid_argument("split_r: requires 1 <= r < n");
    }
    return {r_mat.block(0, 0, r, r), r_mat.block(0, r, r, n - r),
            r_mat.block(r, r, n - r, n - r)};
}

RSplit split_r(const RurvResult& f, std::size_t r) { return split_r(f.r, r); }

}  // namespace randurv
