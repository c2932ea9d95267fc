#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <vector>

#include "randurv/decompose.hpp"
#include "randurv/matrix.hpp"
#include "randurv/rng.hpp"
#include "randurv/synth.hpp"

#include "test_support.hpp"

using randurv::Matrix;
using randurv::SeededRng;

namespace {
constexpr double kEps = 2.220446049250313e-16;
}

// ---------------------------------------------------------------------------
// Seeded generator
// ---------------------------------------------------------------------------

TEST_CASE("equal seed and stream replay identical bits") {
    SeededRng a(42, 7);
    SeededRng b(42, 7);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    SeededRng c(42, 7);
    SeededRng d(42, 7);
    for (int i = 0; i < 1000; ++i) {
        const double x = c.next_gaussian();
        const double y = d.next_gaussian();
        CHECK(std::memcmp(&x, &y, sizeof(double)) == 0);
    }
}

TEST_CASE("distinct streams produce distinct sequences") {
    SeededRng a(42, 0);
    SeededRng b(42, 1);
    SeededRng c(43, 0);
    int equal_ab = 0;
    int equal_ac = 0;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t va = a.next_u64();
        if (va == b.next_u64()) ++equal_ab;
        if (va == c.next_u64()) ++equal_ac;
    }
    CHECK(equal_ab == 0);
    CHECK(equal_ac == 0);
}

TEST_CASE("uniform draws live in the half-open unit interval") {
    SeededRng rng(5, 0);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.next_uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("gaussian sample moments at one million draws") {
    SeededRng rng(42, 0);
    const std::size_t count = 1000000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double g = rng.next_gaussian();
        sum += g;
        sum_sq += g * g;
    }
    const double mean = sum / static_cast<double>(count);
    const double var = sum_sq / static_cast<double>(count) - mean * mean;
    CHECK(mean > -0.005);
    CHECK(mean < 0.005);
    CHECK(var > 0.995);
    CHECK(var < 1.005);
}

TEST_CASE("gaussian matrices replay bit identically per stream") {
    SeededRng a(9, 3);
    SeededRng b(9, 3);
    CHECK(randurv::sample_gaussian_matrix(7, 5, a) == randurv::sample_gaussian_matrix(7, 5, b));
}

// ---------------------------------------------------------------------------
// Haar orthogonal sampling
// ---------------------------------------------------------------------------

TEST_CASE("haar samples are orthogonal") {
    SeededRng rng(11, 0);
    const Matrix v = randurv::sample_haar_orthogonal(100, rng);
    const double defect = randurv::frobenius_norm(
        randurv::subtract(randurv::gemm(randurv::transpose(v), v), Matrix::identity(100)));
    CHECK(defect <= 10.0 * 100.0 * kEps);
}

TEST_CASE("haar first-entry second moment matches 1/n") {
    const std::size_t n = 10;
    const std::size_t samples = 2000;
    double sum = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        SeededRng rng(2024, s);
        const Matrix v = randurv::sample_haar_orthogonal(n, rng);
        sum += v(0, 0) * v(0, 0);
    }
    const double mean = sum / static_cast<double>(samples);
    CHECK(mean > 0.1 - 0.013);
    CHECK(mean < 0.1 + 0.013);
}

TEST_CASE("haar determinant signs are balanced") {
    const std::size_t samples = 2000;
    std::size_t positive = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        SeededRng rng(31337, s);
        const Matrix v = randurv::sample_haar_orthogonal(10, rng);
        if (test_support::det_sign(v) > 0) ++positive;
    }
    const double frac = static_cast<double>(positive) / static_cast<double>(samples);
    CHECK(frac > 0.46);
    CHECK(frac < 0.54);
}

// ---------------------------------------------------------------------------
// Corner smallest singular value
// ---------------------------------------------------------------------------

TEST_CASE("corner smin lies in the unit interval") {
    for (std::size_t s = 0; s < 200; ++s) {
        SeededRng rng(8, s);
        const double v = randurv::sample_corner_smin(8, 3, rng);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    SeededRng rng(8, 0);
    CHECK_THROWS_AS(randurv::sample_corner_smin(5, 5, rng), std::invalid_argument);
    CHECK_THROWS_AS(randurv::sample_corner_smin(5, 0, rng), std::invalid_argument);
}

TEST_CASE("one by one corner of a 3x3 haar matrix is uniform") {
    std::vector<double> samples;
    samples.reserve(5000);
    for (std::size_t s = 0; s < 5000; ++s) {
        SeededRng rng(99, s);
        samples.push_back(randurv::sample_corner_smin(3, 1, rng));
    }
    CHECK(test_support::ks_vs_uniform(samples) <= 0.03);
}

TEST_CASE("corner law is invariant under a fixed permutation") {
    const std::size_t n = 8;
    const std::size_t r = 4;
    Matrix perm(n, n);
    for (std::size_t i = 0; i < n; ++i) perm(i, (i + 3) % n) = 1.0;

    std::vector<double> direct;
    std::vector<double> permuted;
    for (std::size_t s = 0; s < 2000; ++s) {
        SeededRng rng_a(555, 2 * s);
        direct.push_back(randurv::sample_corner_smin(n, r, rng_a));
        SeededRng rng_b(555, 2 * s + 1);
        const Matrix v = randurv::sample_haar_orthogonal(n, rng_b);
        const Matrix pv = randurv::gemm(perm, v);
        permuted.push_back(randurv::jacobi_svd_values(pv.block(0, 0, r, r)).back());
    }
    CHECK(test_support::ks_two_sample(direct, permuted) <= 0.05);
}

TEST_CASE("oversized corners carry unit singular values") {
    // The 8x8 corner of a 10x10 orthogonal matrix has at least 2r - n = 6
    // singular values equal to one.
    SeededRng rng(13, 0);
    const Matrix v = randurv::sample_haar_orthogonal(10, rng);
    const std::vector<double> vals = randurv::jacobi_svd_values(v.block(0, 0, 8, 8));
    std::size_t ones = 0;
    for (double s : vals) {
        if (s >= 1.0 - 1e-10) ++ones;
    }
    CHECK(ones >= 6);
    SeededRng rng2(13, 1);
    CHECK(randurv::sample_corner_smin(10, 8, rng2) <= 1.0);
}

// ---------------------------------------------------------------------------
// Spectrum realization
// ---------------------------------------------------------------------------

TEST_CASE("stair spectrum") {
    randurv::SpectrumSpec spec{randurv::SpectrumSpec::Kind::stair, 4, 2, 10.0, 1e13};
    const std::vector<double> sigma = randurv::realize_spectrum(spec);
    CHECK(sigma == std::vector<double>{10.0, 10.0, 1.0, 1.0});
}

TEST_CASE("logspace spectrum pins endpoints and carries one gap step") {
    randurv::SpectrumSpec spec{randurv::SpectrumSpec::Kind::logspace, 3, 1, 1e7, 1e13};
    const std::vector<double> sigma = randurv::realize_spectrum(spec);
    REQUIRE(sigma.size() == 3);
    CHECK(sigma[0] == 1e13);
    CHECK(sigma[1] == doctest::Approx(1e6).epsilon(1e-12));
    CHECK(sigma[2] == 1.0);

    randurv::SpectrumSpec big{randurv::SpectrumSpec::Kind::logspace, 300, 150, 1e7, 1e13};
    const std::vector<double> s = randurv::realize_spectrum(big);
    CHECK(s.front() == 1e13);
    CHECK(s.back() == 1.0);
    CHECK(s[149] / s[150] == doctest::Approx(1e7).epsilon(1e-10));
    const double rho = s[0] / s[1];
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (i == 150) continue;
        CHECK(s[i - 1] / s[i] == doctest::Approx(rho).epsilon(1e-9));
    }
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] <= s[i - 1]);
}

TEST_CASE("infeasible spectra are rejected") {
    randurv::SpectrumSpec spec{randurv::SpectrumSpec::Kind::logspace, 10, 5, 1e14, 1e13};
    CHECK_THROWS_AS(randurv::realize_spectrum(spec), std::invalid_argument);
    randurv::SpectrumSpec bad_r{randurv::SpectrumSpec::Kind::stair, 10, 10, 2.0, 1e13};
    CHECK_THROWS_AS(randurv::realize_spectrum(bad_r), std::invalid_argument);
    randurv::SpectrumSpec bad_gap{randurv::SpectrumSpec::Kind::stair, 10, 5, 0.5, 1e13};
    CHECK_THROWS_AS(randurv::realize_spectrum(bad_gap), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Matrix synthesis
// ---------------------------------------------------------------------------

TEST_CASE("unit spectrum synthesizes an orthogonal matrix") {
    SeededRng rng(21, 0);
    const Matrix a = randurv::synthesize_matrix(std::vector<double>(12, 1.0), rng);
    const double defect = randurv::frobenius_norm(
        randurv::subtract(randurv::gemm(randurv::transpose(a), a), Matrix::identity(12)));
    CHECK(defect <= 1e-13);
}

TEST_CASE("synthesis round trips a small spectrum") {
    SeededRng rng(22, 0);
    const std::vector<double> sigma{3.0, 2.0, 1.0};
    const Matrix a = randurv::synthesize_matrix(sigma, rng);
    const std::vector<double> got = randurv::jacobi_svd_values(a);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::fabs(got[i] - sigma[i]) <= 1e-12 * sigma[i]);
    }
}

TEST_CASE("synthesis at extreme conditioning keeps the top value accurate") {
    randurv::SpectrumSpec spec{randurv::SpectrumSpec::Kind::logspace, 100, 50, 1e7, 1e13};
    const std::vector<double> sigma = randurv::realize_spectrum(spec);
    SeededRng rng(23, 0);
    const Matrix a = randurv::synthesize_matrix(sigma, rng);
    const std::vector<double> got = randurv::jacobi_svd_values(a);
    CHECK(std::fabs(got.front() - sigma.front()) <= 1e-12 * sigma.front());
    CHECK(std::fabs(got.back() - sigma.back()) <= 1e-2 * sigma.back());
}

TEST_CASE("frobenius norm identity of synthesized matrices") {
    const std::vector<double> sigma{9.0, 4.0, 2.5, 1.0, 0.5};
    SeededRng rng(24, 0);
    const Matrix a = randurv::synthesize_matrix(sigma, rng);
    double sum_sq = 0.0;
    for (double s : sigma) sum_sq += s * s;
    const double fro = randurv::frobenius_norm(a);
    CHECK(fro * fro == doctest::Approx(sum_sq).epsilon(1e-12));
}

TEST_CASE("different streams give different matrices with identical spectra") {
    const std::vector<double> sigma{5.0, 3.0, 1.0, 0.5};
    SeededRng rng_a(25, 0);
    SeededRng rng_b(25, 1);
    const Matrix a = randurv::synthesize_matrix(sigma, rng_a);
    const Matrix b = randurv::synthesize_matrix(sigma, rng_b);
    CHECK_FALSE(a == b);
    const std::vector<double> va = randurv::jacobi_svd_values(a);
    const std::vector<double> vb = randurv::jacobi_svd_values(b);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::fabs(va[i] - vb[i]) <= 1e-11 * va.front());
    }
    CHECK_THROWS_AS(randurv::synthesize_matrix(std::vector<double>{1.0, -1.0}, rng_a),
                    std::invalid_argument);
}
