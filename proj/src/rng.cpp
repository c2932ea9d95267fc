#include "randurv/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "randurv/decompose.hpp"

namespace randurv {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
    key_ = mix64(mix64(seed + 0x9E3779B97F4A7C15ull) ^ (stream + 0x6A09E667F3BCC909ull));
}

std::uint64_t SeededRng::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * 0x9E3779B97F4A7C15ull);
}

double SeededRng::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u1 = next_uniform();
    while (u1 == 0.0) u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = radius * std::sin(angle);
    has_cached_gaussian_ = true;
    return radius * std::cos(angle);
}

Matrix sample_gaussian_matrix(std::size_t n, std::size_t m, SeededRng& rng) {
    if (n == 0 || m == 0) {
        throw std::invalid_argument("sample_gaussian_matrix: dimensions must be positive");
    }
    Matrix g(n, m);
    double* p = g.data();
    const std::size_t total = n * m;
    for (std::size_t i = 0; i < total; ++i) p[i] = rng.next_gaussian();
    return g;
}

Matrix sample_haar_orthogonal(std::size_t n, SeededRng& rng) {
    if (n == 0) {
        throw std::invalid_argument("sample_haar_orthogonal: dimension must be positive");
    }
    Matrix g = sample_gaussian_matrix(n, n, rng);
    return householder_qr(g).q;
}

double sample_corner_smin(std::size_t n, std::size_t r, SeededRng& rng) {
    if (r < 1 || r >= n) {
        throw std::invalid_argument("sample_corner_smin: requires 1 <= r < n");
    }
    Matrix v = sample_haar_orthogonal(n, rng);
    Matrix corner = v.block(0, 0, r, r);
    return jacobi_svd_values(corner).back();
}

}  // namespace randurv
