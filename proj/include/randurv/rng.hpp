#pragma once

#include <cstdint>

#include "randurv/matrix.hpp"

namespace randurv {

// Counter-based generator: every output is a hash of (key, counter) where the
// key is derived from (seed, stream).  Distinct streams of the same seed are
// statistically independent, and any (seed, stream) pair replays the same
// sequence regardless of what other streams were consumed, which is what makes
// per-trial parallelism bit-reproducible.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit resolution.
    double next_uniform();

    // Standard normal via the Box-Muller pair; the second value of each pair
    // is cached, so draws come in deterministic twos.
    double next_gaussian();

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

// n x m matrix of independent standard normals, filled row-major.
Matrix sample_gaussian_matrix(std::size_t n, std::size_t m, SeededRng& rng);

// Haar-distributed n x n orthogonal matrix: QR of a Gaussian matrix under the
// nonnegative-diagonal sign convention.
Matrix sample_haar_orthogonal(std::size_t n, SeededRng& rng);

// Smallest singular value of the leading r x r corner of a Haar n x n
// orthogonal matrix.  Requires 1 <= r < n.
double sample_corner_smin(std::size_t n, std::size_t r, SeededRng& rng);

}  // namespace randurv
