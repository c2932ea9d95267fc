#include "randurv/synth.hpp"

#include <cmath>
#include <stdexcept>

namespace randurv {

std::vector<double> realize_spectrum(const SpectrumSpec& spec) {
    const std::size_t n = spec.n;
    const std::size_t r = spec.r;
    if (n < 2 || r < 1 || r >= n) {
        throw std::invalid_argument("realize_spectrum: requires 1 <= r < n, n >= 2");
    }
    if (!(spec.gap >= 1.0) || !std::isfinite(spec.gap)) {
        throw std::invalid_argument("realize_spectrum: requires gap >= 1");
    }

    std::vector<double> sigma(n);
    if (spec.kind == SpectrumSpec::Kind::stair) {
        for (std::size_t i = 0; i < n; ++i) sigma[i] = i < r ? spec.gap : 1.0;
        return sigma;
    }

    if (!(spec.top >= 1.0) || !std::isfinite(spec.top)) {
        throw std::invalid_argument("realize_spectrum: requires top >= 1");
    }
    if (spec.gap > spec.top) {
        throw std::invalid_argument("realize_spectrum: infeasible logspace spec (gap > top)");
    }
    if (n == 2 && spec.gap != spec.top) {
        throw std::invalid_argument(
            "realize_spectrum: logspace with n = 2 requires gap == top");
    }
    // Common ratio rho solves rho^{n-2} * gap = top: one step (index r) carries
    // the gap, the other n-2 steps share the rest of the decay evenly.
    const double rho =
        n == 2 ? 1.0 : std::pow(spec.top / spec.gap, 1.0 / static_cast<double>(n - 2));
    sigma[0] = spec.top;
    for (std::size_t i = 1; i < n; ++i) {
        sigma[i] = sigma[i - 1] / (i == r ? spec.gap : rho);
    }
    sigma[n - 1] = 1.0;  // pin the endpoint exactly against accumulated rounding
    return sigma;
}

Matrix synthesize_matrix(const std::vector<double>& sigma, SeededRng& rng) {
    const std::size_t n = sigma.size();
    if (n == 0) {
        throw std::invalid_argument("synthesize_matrix: empty spectrum");
    }
    for (double s : sigma) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw std::invalid_argument("synthesize_matrix: spectrum must be positive and finite");
        }
    }
    Matrix p = sample_haar_orthogonal(n, rng);
    Matrix q = sample_haar_orthogonal(n, rng);
    // scaled = diag(sigma) * Q^T, then A = P * scaled
    Matrix scaled = transpose(q);
    for (std::size_t i = 0; i < n; ++i) {
        double* row = scaled.row(i);
        const double si = sigma[i];
        for (std::size_t j = 0; j < n; ++j) row[j] *= si;
    }
    return gemm(p, scaled);
}

}  // namespace randurv
