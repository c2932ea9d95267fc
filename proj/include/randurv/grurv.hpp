#pragma once

#include <cstddef>
#include <vector>

#include "randurv/matrix.hpp"
#include "randurv/metrics.hpp"
#include "randurv/rng.hpp"

namespace randurv {

// A product A_1^{m_1} A_2^{m_2} ... A_k^{m_k} of square factors with
// exponents m_i in {+1, -1}.  The product itself is never formed.
struct FactorChain {
    struct Entry {
        Matrix matrix;
        int exponent = 1;
    };

    std::vector<Entry> entries;

    std::size_t size() const noexcept { return entries.size(); }
    std::size_t dim() const noexcept { return entries.empty() ? 0 : entries[0].matrix.rows(); }
};

// Implicit factorization of the chain product M = U R_1^{m_1} ... R_k^{m_k} V
// with U, V orthogonal and every R_i upper triangular.
struct GrurvResult {
    Matrix u_current;
    Matrix v;
    std::vector<Matrix> r_list;
    std::vector<int> exponents;
};

// Generalized randomized URV: factors the chain product by propagating the
// current orthogonal factor through one QR (exponent +1) or RQ (exponent -1)
// per remaining factor, right to left.  Only the last factor is sketched with
// the Haar sample.  Inverted factors are checked for numerical singularity
// (smin > n * eps * smax) when first touched; failure raises SingularError
// carrying the 1-based factor index.
GrurvResult grurv(const FactorChain& chain, SeededRng& rng);

// Explicit triangular factor R = R_1^{m_1} ... R_k^{m_k}, built with
// triangular right-division only (never a matrix inverse).  A singular R_i in
// an inverted position raises SingularError carrying the 1-based factor
// index.  The strict lower triangle of the output is zeroed.
Matrix assemble_r(const GrurvResult& result);

// Metric bundle for the implicit factorization: ratios and orthogonality are
// measured on assemble_r's output; backward_error is measured against
// `product` when supplied (the explicit chain product) and reported as 0
// when no reference product is available.
TrialRecord implicit_rank_metrics(const std::vector<double>& sigma, const GrurvResult& result,
                                  std::size_t r, const Matrix* product = nullptr);

}  // namespace randurv
