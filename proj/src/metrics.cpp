#include "randurv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "randurv/decompose.hpp"
#include "randurv/error.hpp"

namespace randurv {

double percentile_value(std::vector<double> values, double p) {
    if (values.empty()) {
        throw std::invalid_argument("percentile_value: empty sample");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("percentile_value: requires 0 <= p <= 1");
    }
    std::sort(values.begin(), values.end());
    const double pos = p * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

double backward_error(const Matrix& a, const Matrix& u, const Matrix& r, const Matrix& v) {
    Matrix reconstructed = gemm(gemm(u, r), v);
    const double resid = frobenius_norm(subtract(a, reconstructed));
    const double denom = frobenius_norm(a);
    if (denom == 0.0) {
        return resid == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return resid / denom;
}

double orthogonality_defect(const Matrix& q) {
    if (q.rows() != q.cols()) {
        throw std::invalid_argument("orthogonality_defect: requires a square matrix");
    }
    Matrix gram = gemm(transpose(q), q);
    for (std::size_t i = 0; i < gram.rows(); ++i) gram(i, i) -= 1.0;
    return frobenius_norm(gram);
}

TrialRecord rank_reveal_core(const std::vector<double>& sigma, const RurvResult& result,
                             std::size_t r) {
    const std::size_t n = sigma.size();
    if (result.r.rows() != n) {
        throw std::invalid_argument("rank_reveal_core: spectrum/factor size mismatch");
    }
    if (r < 1 || r >= n) {
        throw std::invalid_argument("rank_reveal_core: requires 1 <= r < n");
    }

    TrialRecord rec;
    rec.orth_u = orthogonality_defect(result.u);
    rec.orth_v = orthogonality_defect(result.v);

    RSplit split = split_r(result.r, r);
    rec.ratio2 = spectral_norm(split.r22) / sigma[r];

    const std::vector<double> sv11 = jacobi_svd_values(split.r11);
    const double smin = sv11.back();
    const double inf = std::numeric_limits<double>::infinity();
    if (!(smin > 0.0) || smin < 1e-300 * sv11.front()) {
        rec.ratio1 = inf;
        rec.norm3 = inf;
        rec.flagged = true;
        return rec;
    }
    rec.ratio1 = sigma[r - 1] / smin;
    try {
        rec.norm3 = spectral_norm(solve_upper_triangular(split.r11, split.r12));
    } catch (const SingularError&) {
        rec.norm3 = inf;
        rec.flagged = true;
    }
    return rec;
}

TrialRecord rank_reveal_metrics(const std::vector<double>& sigma, const Matrix& a,
                                const RurvResult& result, std::size_t r) {
    if (a.rows() != sigma.size()) {
        throw std::invalid_argument("rank_reveal_metrics: spectrum/matrix size mismatch");
    }
    TrialRecord rec = rank_reveal_core(sigma, result, r);
    rec.backward_error = backward_error(a, result.u, result.r, result.v);
    return rec;
}

namespace {

MetricStats stats_for(std::vector<double> values, double percentile, double bound) {
    MetricStats s;
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    auto at = [&](double p) {
        const double pos = p * static_cast<double>(values.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        if (lo + 1 >= values.size()) return values.back();
        const double frac = pos - static_cast<double>(lo);
        return values[lo] + frac * (values[lo + 1] - values[lo]);
    };
    s.q1 = at(0.25);
    s.median = at(0.5);
    s.q3 = at(0.75);
    s.p97 = at(percentile);
    if (std::isfinite(bound)) {
        s.exceed_count = static_cast<std::size_t>(
            std::count_if(values.begin(), values.end(), [&](double v) { return v > bound; }));
    }
    return s;
}

}  // namespace

Summary summarize(const std::vector<TrialRecord>& records, const BoundSet& bounds,
                  double percentile) {
    if (records.empty()) {
        throw std::invalid_argument("summarize: empty record list");
    }
    if (!(percentile >= 0.0 && percentile <= 1.0)) {
        throw std::invalid_argument("summarize: requires 0 <= percentile <= 1");
    }

    std::vector<double> r1, r2, n3, be;
    std::size_t singular = 0;
    for (const TrialRecord& rec : records) {
        if (rec.flagged) {
            ++singular;
            continue;
        }
        r1.push_back(rec.ratio1);
        r2.push_back(rec.ratio2);
        n3.push_back(rec.norm3);
        be.push_back(rec.backward_error);
    }
    if (r1.empty()) {
        throw std::invalid_argument("summarize: every record is flagged singular");
    }

    const double inf = std::numeric_limits<double>::infinity();
    double norm3_bound = inf;
    if (bounds.b4_applicable && bounds.b4) {
        norm3_bound = *bounds.b4;
    } else if (bounds.b3) {
        norm3_bound = *bounds.b3;
    }

    Summary s;
    s.count = r1.size();
    s.singular_count = singular;
    s.percentile = percentile;
    s.ratio1 = stats_for(std::move(r1), percentile, bounds.b1);
    s.ratio2 = stats_for(std::move(r2), percentile, bounds.b2);
    s.norm3 = stats_for(std::move(n3), percentile, norm3_bound);
    s.backward_error = stats_for(std::move(be), percentile, inf);
    return s;
}

}  // namespace randurv
