#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace randurv {

// Parameters of the corner-block smallest-singular-value law: the leading
// r x r corner of a Haar n x n orthogonal matrix.  The closed-form density
// below requires 1 <= r < n/2; callers reduce larger corners to the
// complementary block before evaluating.
struct DensityParams {
    std::size_t r;
    std::size_t n;

    DensityParams(std::size_t r_in, std::size_t n_in);
};

// Probabilistic envelope for the rank-revealing metrics at failure budget
// delta.  b1 bounds sigma_r / smin(R11), b2 bounds smax(R22) / sigma_{r+1};
// both hold with probability >= 1 - delta.  b3 bounds |R11^{-1} R12| whenever
// a spectral gap is supplied; b4 is the sharper gap-free form that applies
// only when the gap exceeds sqrt(2) * 1.01 * n / delta.
struct BoundSet {
    std::size_t r = 0;
    std::size_t n = 0;
    double delta = 0.0;
    std::optional<double> gap;
    double b1 = 0.0;
    double b2 = 0.0;
    std::optional<double> b3;
    std::optional<double> b4;
    bool b4_applicable = false;
};

// Spectrum-dependent deterministic envelopes: the same three metrics can
// never exceed these regardless of the random draw.  A zero trailing singular
// value makes d1 and d3 infinite.
struct DeterministicBounds {
    double d1 = 0.0;  // bounds sigma_r / smin(R11)
    double d2 = 0.0;  // bounds smax(R22) / sigma_{r+1}
    double d3 = 0.0;  // bounds |R11^{-1} R12|
};

// log Gamma(x) for x > 0 (Lanczos approximation, machine accurate on
// [0.5, 1e4]).
double log_gamma(double x);

// Normalizing constant of the corner density, evaluated in log space:
// c = (r(n-r)/2) Gamma((n-r+1)/2) Gamma((r+1)/2) / (Gamma(1/2) Gamma((n+1)/2)).
double normalization_constant(const DensityParams& p);

// Gauss hypergeometric 2F1(a, b; c; z) for the parameter family of the corner
// density (a, b >= 0, c = a + b + 3/2, z in [0, 1]).  The direct series is
// used wherever it converges acceptably; only when z > 1/2 and a*b*(1-z) <= 1
// does the c - a - b = 3/2 connection formula take over, which is exactly the
// regime where its two terms cannot cancel.  Series cap 1e6 terms.
double hyp2f1_near_one(double a, double b, double c, double z);

// Density of the squared corner smallest singular value at x in (0, 1).
double density_s2(const DensityParams& p, double x);

// Tail bound P[smin <= delta / sqrt(r(n-r))] <= min(2.02 delta, 1) for
// r, n - r > 30.
double tail_probability_bound(std::size_t r, std::size_t n, double delta);

// Bound set at (r, n, delta) and optional spectral gap sigma_r / sigma_{r+1}.
BoundSet theorem_bounds(std::size_t r, std::size_t n, double delta,
                        std::optional<double> gap = std::nullopt);

// Deterministic envelopes from a positive nonincreasing spectrum.
DeterministicBounds deterministic_bounds(const std::vector<double>& sigma, std::size_t r);

}  // namespace randurv
