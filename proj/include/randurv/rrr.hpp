#pragma once

#include <cstddef>

#include "randurv/matrix.hpp"
#include "randurv/rng.hpp"

namespace randurv {

struct RurvResult {
    Matrix u;  // orthogonal
    Matrix r;  // upper triangular, diagonal >= 0
    Matrix v;  // Haar orthogonal
};

struct RulvResult {
    Matrix u;  // orthogonal
    Matrix l;  // lower triangular, diagonal >= 0
    Matrix v;  // Haar orthogonal
};

struct RSplit {
    Matrix r11;  // r x r leading block
    Matrix r12;  // r x (n - r)
    Matrix r22;  // (n - r) x (n - r) trailing block
};

// Randomized URV of a square matrix: draw a Haar orthogonal V, then factor
// A V^T = U R, so A = U R V.  Because V is drawn from the rotation-invariant
// Haar measure, R's rank-revealing quality depends on A only through its
// singular values.
RurvResult rurv(const Matrix& a, SeededRng& rng);

// Randomized ULV: same sketch, but A V^T = U L with L lower triangular.
RulvResult rulv(const Matrix& a, SeededRng& rng);

// Partition of the square triangular factor at index r (1 <= r < n).
RSplit split_r(const Matrix& r_mat, std::size_t r);
RSplit split_r(const RurvResult& f, std::size_t r);

}  // namespace randurv
