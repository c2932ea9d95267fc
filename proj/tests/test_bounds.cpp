#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "randurv/bounds.hpp"
#include "randurv/rng.hpp"
#include "randurv/synth.hpp"

#include "test_support.hpp"

using randurv::DensityParams;

namespace {

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

}  // namespace

// ---------------------------------------------------------------------------
// log Gamma
// ---------------------------------------------------------------------------

TEST_CASE("log gamma hits fixed points and reference values") {
    CHECK(std::fabs(randurv::log_gamma(1.0)) <= 1e-15);
    CHECK(std::fabs(randurv::log_gamma(2.0)) <= 1e-15);
    CHECK(std::fabs(randurv::log_gamma(0.5) - 0.57236494292470008707) <= 1e-12);
    CHECK(std::fabs(randurv::log_gamma(10.0) - 12.801827480081469611) <= 1e-12);
    CHECK(std::fabs(randurv::log_gamma(4.5) - 2.4537365708424422205) <= 1e-12);
}

TEST_CASE("log gamma tracks the library function across the working range") {
    for (double x = 0.5; x <= 10000.0; x += 13.25) {
        const double got = randurv::log_gamma(x);
        const double want = std::lgamma(x);
        CHECK(std::fabs(got - want) <= 2e-13 + 2e-15 * std::fabs(want));
    }
    CHECK(std::fabs(randurv::log_gamma(1e4) - 82099.71749644237727264896) <=
          1e-13 * 82099.71749644237727264896);
}

TEST_CASE("log gamma rejects the nonpositive axis") {
    CHECK_THROWS_AS(randurv::log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(randurv::log_gamma(-3.0), std::domain_error);
}

// ---------------------------------------------------------------------------
// Normalizing constant and parameter validation
// ---------------------------------------------------------------------------

TEST_CASE("normalizing constant matches closed forms") {
    CHECK(rel_err(randurv::normalization_constant(DensityParams(1, 3)), 0.5) <= 1e-12);
    CHECK(rel_err(randurv::normalization_constant(DensityParams(2, 6)), 0.8) <= 1e-12);
    CHECK(rel_err(randurv::normalization_constant(DensityParams(3, 10)),
                  0.67906109052542009928) <= 1e-12);
}

TEST_CASE("normalizing constant is positive across a parameter grid") {
    for (std::size_t n = 3; n <= 40; ++n) {
        for (std::size_t r = 1; 2 * r < n; ++r) {
            CHECK(randurv::normalization_constant(DensityParams(r, n)) > 0.0);
        }
    }
}

TEST_CASE("density parameters require a strict corner") {
    CHECK_THROWS_AS(DensityParams(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(DensityParams(5, 10), std::invalid_argument);
    CHECK_THROWS_AS(DensityParams(6, 10), std::invalid_argument);
    CHECK_NOTHROW(DensityParams(4, 10));
}

// ---------------------------------------------------------------------------
// Hypergeometric evaluation
// ---------------------------------------------------------------------------

TEST_CASE("hypergeometric series degenerate cases") {
    for (double z : {0.0, 0.3, 0.7, 0.99}) {
        CHECK(randurv::hyp2f1_near_one(3.0, 0.0, 4.5, z) == 1.0);
    }
    CHECK(randurv::hyp2f1_near_one(2.5, 1.5, 5.5, 0.0) == 1.0);
}

TEST_CASE("hypergeometric matches reference values on the working family") {
    const double a = 3.0, b = 1.0, c = 5.5;
    CHECK(rel_err(randurv::hyp2f1_near_one(a, b, c, 0.1), 1.0581429302318598683) <= 5e-13);
    CHECK(rel_err(randurv::hyp2f1_near_one(a, b, c, 0.3), 1.2015350703708332432) <= 5e-13);
    CHECK(rel_err(randurv::hyp2f1_near_one(a, b, c, 0.5), 1.4004214701962175289) <= 5e-13);
    CHECK(rel_err(randurv::hyp2f1_near_one(a, b, c, 0.75), 1.8097711846511480802) <= 5e-13);
    CHECK(rel_err(randurv::hyp2f1_near_one(a, b, c, 0.9), 2.2791839296947247888) <= 5e-13);
    CHECK(rel_err(randurv::hyp2f1_near_one(a, b, c, 0.99), 2.8698198350376312284) <= 5e-13);
    CHECK(rel_err(randurv::hyp2f1_near_one(a, b, c, 1.0), 3.0) <= 1e-13);
}

TEST_CASE("hypergeometric value at the right endpoint via the gamma identity") {
    // r = 2, n = 6 gives a = 1.5, b = 0.5, c = 3.5; the z = 1 limit equals
    // Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
    CHECK(rel_err(randurv::hyp2f1_near_one(1.5, 0.5, 3.5, 1.0),
                  1.4726215563702155805) <= 1e-13);
}

TEST_CASE("hypergeometric is continuous at the endpoint across parameters") {
    for (std::size_t n = 8; n <= 20; n += 4) {
        for (std::size_t r = 2; r <= 6 && 2 * r < n; ++r) {
            const double a = (static_cast<double>(n - r) - 1.0) / 2.0;
            const double b = (static_cast<double>(r) - 1.0) / 2.0;
            const double c = (static_cast<double>(n) - 1.0) / 2.0 + 1.0;
            // close enough to the endpoint that the first-derivative term
            // (of size roughly a * b / |a + b - c + 1| relative) stays below
            // the tolerance for every parameter set in the loop
            const double at_one = randurv::hyp2f1_near_one(a, b, c, 1.0);
            const double near_one = randurv::hyp2f1_near_one(a, b, c, 1.0 - 1e-12);
            CHECK(std::fabs(at_one - near_one) <= 1e-9 * std::fabs(at_one));
        }
    }
}

// ---------------------------------------------------------------------------
// Corner density
// ---------------------------------------------------------------------------

TEST_CASE("density matches reference values") {
    const DensityParams p(3, 10);
    CHECK(rel_err(randurv::density_s2(p, 0.1), 1.7988380288410349943) <= 1e-12);
    CHECK(rel_err(randurv::density_s2(p, 0.5), 0.0018573666616145616738) <= 1e-12);
    const DensityParams q(35, 80);
    CHECK(rel_err(randurv::density_s2(q, 0.01), 0.0085044967419125572342) <= 1e-12);
}

TEST_CASE("one dimensional corner density is the arcsine edge law") {
    const DensityParams p(1, 3);
    for (double x : {0.01, 0.25, 0.81}) {
        CHECK(std::fabs(randurv::density_s2(p, x) - 0.5 / std::sqrt(x)) <= 1e-10);
    }
}

TEST_CASE("density respects its envelope at the origin side") {
    const DensityParams p(35, 80);
    const double envelope = 1.01 * std::sqrt(35.0 * 45.0) / std::sqrt(0.01);
    CHECK(randurv::density_s2(p, 0.01) <= envelope);
}

TEST_CASE("density domain is the open unit interval") {
    const DensityParams p(3, 10);
    CHECK_THROWS_AS(randurv::density_s2(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(randurv::density_s2(p, 1.0), std::domain_error);
    CHECK_THROWS_AS(randurv::density_s2(p, -0.5), std::domain_error);
    CHECK_THROWS_AS(randurv::density_s2(p, 1.5), std::domain_error);
}

TEST_CASE("density integrates to one and matches tabulated quantiles") {
    test_support::DensityCdf cdf(3, 10);
    CHECK(std::fabs(cdf.total() - 1.0) <= 1e-6);
    CHECK(std::fabs(cdf(0.001) - 0.12819929683378246277) <= 1e-6);
    CHECK(std::fabs(cdf(0.01) - 0.38881638500420643894) <= 1e-6);
    CHECK(std::fabs(cdf(0.05) - 0.74178650619133639139) <= 1e-6);
    CHECK(std::fabs(cdf(0.1) - 0.89062830820523450826) <= 1e-6);
    CHECK(std::fabs(cdf(0.2) - 0.97819458270982025797) <= 1e-6);
}

// ---------------------------------------------------------------------------
// Tail bound
// ---------------------------------------------------------------------------

TEST_CASE("tail bound formula and clamping") {
    CHECK(randurv::tail_probability_bound(40, 80, 0.03) == doctest::Approx(0.0606).epsilon(1e-12));
    CHECK(randurv::tail_probability_bound(40, 80, 0.6) == 1.0);
    CHECK(randurv::tail_probability_bound(31, 62, 0.1) == doctest::Approx(0.202).epsilon(1e-12));
}

TEST_CASE("tail bound requires both blocks above thirty") {
    CHECK_THROWS_AS(randurv::tail_probability_bound(30, 100, 0.03), std::invalid_argument);
    CHECK_THROWS_AS(randurv::tail_probability_bound(40, 70, 0.03), std::invalid_argument);
    CHECK_NOTHROW(randurv::tail_probability_bound(31, 62, 0.03));
}

// ---------------------------------------------------------------------------
// Probabilistic bound set
// ---------------------------------------------------------------------------

TEST_CASE("bound set values at a symmetric split") {
    const randurv::BoundSet b = randurv::theorem_bounds(750, 1500, 0.03);
    CHECK(b.b1 == doctest::Approx(50500.0).epsilon(1e-12));
    CHECK(b.b2 == doctest::Approx(50500.0).epsilon(1e-12));
    CHECK_FALSE(b.b3.has_value());
    CHECK_FALSE(b.b4.has_value());
    CHECK_FALSE(b.b4_applicable);
}

TEST_CASE("gap dependent bounds and the sharper-form threshold") {
    const randurv::BoundSet wide = randurv::theorem_bounds(750, 1500, 0.03, 1e7);
    REQUIRE(wide.b3.has_value());
    REQUIRE(wide.b4.has_value());
    CHECK(wide.b4_applicable);
    CHECK(*wide.b4 == doctest::Approx(101001.0).epsilon(1e-12));

    const randurv::BoundSet narrow = randurv::theorem_bounds(750, 1500, 0.03, 1e3);
    REQUIRE(narrow.b3.has_value());
    CHECK_FALSE(narrow.b4_applicable);

    const randurv::BoundSet mid = randurv::theorem_bounds(150, 300, 0.03, 1e7);
    REQUIRE(mid.b3.has_value());
    CHECK(rel_err(*mid.b3, 655500.0) <= 1e-12);
    CHECK(mid.b1 == doctest::Approx(10100.0).epsilon(1e-12));
}

TEST_CASE("bound set validation") {
    CHECK_THROWS_AS(randurv::theorem_bounds(30, 300, 0.03), std::invalid_argument);
    CHECK_THROWS_AS(randurv::theorem_bounds(280, 300, 0.03), std::invalid_argument);
    CHECK_THROWS_AS(randurv::theorem_bounds(150, 300, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(randurv::theorem_bounds(150, 300, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(randurv::theorem_bounds(150, 300, 0.03, 0.5), std::invalid_argument);
}

TEST_CASE("bounds grow as the failure budget shrinks and with the corner size") {
    double prev = 0.0;
    for (double delta : {0.1, 0.03, 0.01}) {
        const randurv::BoundSet b = randurv::theorem_bounds(100, 200, delta);
        CHECK(b.b1 > prev);
        prev = b.b1;
    }
    prev = 0.0;
    for (std::size_t r : {31, 50, 75, 100}) {
        const randurv::BoundSet b = randurv::theorem_bounds(r, 200, 0.03);
        CHECK(b.b1 > prev);
        prev = b.b1;
    }
}

// ---------------------------------------------------------------------------
// Deterministic envelopes
// ---------------------------------------------------------------------------

TEST_CASE("deterministic envelopes from engineered spectra") {
    randurv::SpectrumSpec stair{randurv::SpectrumSpec::Kind::stair, 10, 4, 50.0, 1e13};
    const randurv::DeterministicBounds d =
        randurv::deterministic_bounds(randurv::realize_spectrum(stair), 4);
    CHECK(d.d1 == 50.0);
    CHECK(d.d2 == 50.0);
    CHECK(d.d3 == 50.0);

    const randurv::DeterministicBounds flat =
        randurv::deterministic_bounds(std::vector<double>(6, 1.0), 3);
    CHECK(flat.d1 == 1.0);
    CHECK(flat.d2 == 1.0);
    CHECK(flat.d3 == 1.0);

    randurv::SpectrumSpec log_spec{randurv::SpectrumSpec::Kind::logspace, 20, 10, 1e7, 1e13};
    const randurv::DeterministicBounds lg =
        randurv::deterministic_bounds(randurv::realize_spectrum(log_spec), 10);
    CHECK(lg.d3 == 1e13);
}

TEST_CASE("deterministic envelope validation") {
    CHECK_THROWS_AS(randurv::deterministic_bounds({3.0, 2.0, 1.0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(randurv::deterministic_bounds({3.0, 2.0, 1.0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(randurv::deterministic_bounds({1.0, 2.0, 3.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(randurv::deterministic_bounds({3.0, -1.0}, 1), std::invalid_argument);
}
