#pragma once

#include <cstddef>
#include <vector>

#include "randurv/matrix.hpp"
#include "randurv/rng.hpp"

namespace randurv {

// The two engineered singular-value profiles used by the experiments.
//
// stair: sigma_1 = ... = sigma_r = gap, sigma_{r+1} = ... = sigma_n = 1.
// logspace: sigma_1 = top, sigma_n = 1, log-uniform decay everywhere except a
// single jump of `gap` between index r and r+1.
struct SpectrumSpec {
    enum class Kind { stair, logspace };

    Kind kind = Kind::stair;
    std::size_t n = 0;
    std::size_t r = 0;
    double gap = 1.0;
    double top = 1e13;  // logspace only
};

std::vector<double> realize_spectrum(const SpectrumSpec& spec);

// A = P diag(sigma) Q^T with P, Q independent Haar orthogonal matrices, so the
// singular values of A are exactly the given spectrum and the singular vectors
// carry no structure.
Matrix synthesize_matrix(const std::vector<double>& sigma, SeededRng& rng);

}  // namespace randurv
