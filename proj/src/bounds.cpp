#include "randurv/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "randurv/error.hpp"

namespace randurv {

namespace {

constexpr double kLanczosG0 = 0.99999999999980993;
constexpr double kLanczos[8] = {
    676.5203681218851,     -1259.1392167224028,  771.32342877765313,
    -176.61502916214059,   12.507343278686905,   -0.13857109526572012,
    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Direct Gauss series.  For the density family's own parameters every term is
// positive, so the sum is cancellation-free; the connection-formula branches
// pass a negative c, hence the absolute-value stopping rule.
double gauss_series(double a, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t k = 0; k < 1000000; ++k) {
        const double kd = static_cast<double>(k);
        term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
        sum += term;
        if (std::fabs(term) <= std::fabs(sum) * 1e-17) return sum;
    }
    throw ConvergenceError("hyp2f1_near_one: series did not converge in 1e6 terms",
                           std::fabs(z));
}

}  // namespace

DensityParams::DensityParams(std::size_t r_in, std::size_t n_in) : r(r_in), n(n_in) {
    if (r < 1 || 2 * r >= n) {
        throw std::invalid_argument("DensityParams: requires 1 <= r < n/2");
    }
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: requires x > 0");
    }
    const double xm1 = x - 1.0;
    double acc = kLanczosG0;
    for (int i = 0; i < 8; ++i) acc += kLanczos[i] / (xm1 + i + 1);
    const double t = xm1 + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t +
           std::log(acc);
}

double normalization_constant(const DensityParams& p) {
    const double r = static_cast<double>(p.r);
    const double n = static_cast<double>(p.n);
    const double log_c = std::log(0.5 * r * (n - r)) + log_gamma((n - r + 1.0) / 2.0) +
                         log_gamma((r + 1.0) / 2.0) - log_gamma(0.5) -
                         log_gamma((n + 1.0) / 2.0);
    return std::exp(log_c);
}

double hyp2f1_near_one(double a, double b, double c, double z) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw std::domain_error("hyp2f1_near_one: requires z in [0, 1]");
    }
    if (a < 0.0 || b < 0.0) {
        throw std::domain_error("hyp2f1_near_one: requires a, b >= 0");
    }
    if (a == 0.0 || b == 0.0 || z == 0.0) return 1.0;

    if (z == 1.0) {
        // 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)),
        // and c - a - b = 3/2 throughout this family.
        return std::exp(log_gamma(c) + log_gamma(1.5) - log_gamma(c - a) -
                        log_gamma(c - b));
    }

    const double w = 1.0 - z;
    if (z > 0.5 && a * b * w <= 1.0) {
        // Connection formula at c - a - b = 3/2.  Safe only in this corner:
        // the second term is O(a b w^{3/2}) relative to the first, so the two
        // terms cannot cancel here.
        const double gamma_m32 = 4.0 * std::sqrt(std::numbers::pi) / 3.0;
        const double t1 = std::exp(log_gamma(c) + log_gamma(1.5) - log_gamma(c - a) -
                                   log_gamma(c - b)) *
                          gauss_series(a, b, -0.5, w);
        const double t2 = std::exp(log_gamma(c) - log_gamma(a) - log_gamma(b)) *
                          gamma_m32 * w * std::sqrt(w) *
                          gauss_series(c - a, c - b, 2.5, w);
        return t1 + t2;
    }
    return gauss_series(a, b, c, z);
}

double density_s2(const DensityParams& p, double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("density_s2: requires x in (0, 1)");
    }
    const double r = static_cast<double>(p.r);
    const double n = static_cast<double>(p.n);
    const double a = (n - r - 1.0) / 2.0;
    const double b = (r - 1.0) / 2.0;
    const double c = (n - 1.0) / 2.0 + 1.0;
    const double exponent = 0.5 * r * (n - r) - 1.0;
    const double c_rn = normalization_constant(p);
    return c_rn / std::sqrt(x) * std::exp(exponent * std::log1p(-x)) *
           hyp2f1_near_one(a, b, c, 1.0 - x);
}

double tail_probability_bound(std::size_t r, std::size_t n, double delta) {
    if (r <= 30 || n <= r || n - r <= 30) {
        throw std::invalid_argument("tail_probability_bound: requires r > 30 and n - r > 30");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("tail_probability_bound: requires 0 < delta < 1");
    }
    return std::min(2.02 * delta, 1.0);
}

BoundSet theorem_bounds(std::size_t r, std::size_t n, double delta,
                        std::optional<double> gap) {
    if (r <= 30 || n <= r || n - r <= 30) {
        throw std::invalid_argument("theorem_bounds: requires r > 30 and n - r > 30");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("theorem_bounds: requires 0 < delta < 1");
    }
    if (gap && !(*gap >= 1.0)) {
        throw std::invalid_argument("theorem_bounds: requires gap >= 1");
    }

    BoundSet out;
    out.r = r;
    out.n = n;
    out.delta = delta;
    out.gap = gap;

    const double rd = static_cast<double>(r);
    const double nd = static_cast<double>(n);
    const double s = std::sqrt(rd * (nd - rd));
    out.b1 = 2.02 / delta * s;
    out.b2 = out.b1;
    if (gap) {
        const double inv_gap = 1.0 / *gap;
        out.b3 = 6.1 * s / delta + inv_gap * 50.0 * s * s * s / (delta * delta * delta);
        out.b4_applicable = *gap > std::sqrt(2.0) * 1.01 * nd / delta;
        if (out.b4_applicable) {
            out.b4 = 4.04 / delta * s + 1.0;
        }
    }
    return out;
}

DeterministicBounds deterministic_bounds(const std::vector<double>& sigma, std::size_t r) {
    const std::size_t n = sigma.size();
    if (n < 2 || r < 1 || r >= n) {
        throw std::invalid_argument("deterministic_bounds: requires 1 <= r < n, n >= 2");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(sigma[i] >= 0.0) || !std::isfinite(sigma[i])) {
            throw std::invalid_argument("deterministic_bounds: spectrum must be nonnegative and finite");
        }
        if (i > 0 && sigma[i] > sigma[i - 1]) {
            throw std::invalid_argument("deterministic_bounds: spectrum must be nonincreasing");
        }
    }
    if (!(sigma[r] > 0.0)) {
        throw std::invalid_argument("deterministic_bounds: sigma_{r+1} must be positive");
    }

    const double inf = std::numeric_limits<double>::infinity();
    DeterministicBounds d;
    d.d1 = sigma[n - 1] > 0.0 ? sigma[r - 1] / sigma[n - 1] : inf;
    d.d2 = sigma[0] / sigma[r];
    d.d3 = sigma[n - 1] > 0.0 ? sigma[0] / sigma[n - 1] : inf;
    return d;
}

}  // namespace randurv
