#include "randurv/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "randurv/decompose.hpp"
#include "randurv/error.hpp"
#include "randurv/matrix_io.hpp"
#include "randurv/rrr.hpp"

namespace randurv {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct GridPoint {
    std::size_t n;
    double gap;
    std::size_t index;
};

const char* dist_name(SpectrumSpec::Kind kind) {
    return kind == SpectrumSpec::Kind::stair ? "stair" : "logspace";
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.n_list.empty() || cfg.gap_list.empty()) {
        throw std::invalid_argument("experiment: n and gap lists must be nonempty");
    }
    switch (cfg.mode) {
        case ExperimentConfig::Mode::single:
            if (cfg.n_list.size() != 1 || cfg.gap_list.size() != 1) {
                throw std::invalid_argument("experiment: single mode takes one n and one gap");
            }
            break;
        case ExperimentConfig::Mode::vary_gap:
            if (cfg.n_list.size() != 1) {
                throw std::invalid_argument("experiment: vary-gap mode takes exactly one n");
            }
            break;
        case ExperimentConfig::Mode::vary_dim:
            if (cfg.gap_list.size() != 1) {
                throw std::invalid_argument("experiment: vary-dim mode takes exactly one gap");
            }
            break;
    }
    if (cfg.trials < 1) {
        throw std::invalid_argument("experiment: trials must be >= 1");
    }
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) {
        throw std::invalid_argument("experiment: requires 0 < delta < 1");
    }
    if (!(cfg.percentile >= 0.0 && cfg.percentile <= 1.0)) {
        throw std::invalid_argument("experiment: requires 0 <= percentile <= 1");
    }
    if (cfg.jobs < 1) {
        throw std::invalid_argument("experiment: jobs must be >= 1");
    }
    for (std::size_t n : cfg.n_list) {
        if (n < 2) {
            throw std::invalid_argument("experiment: n must be >= 2");
        }
        const std::size_t r = cfg.r ? *cfg.r : n / 2;
        if (r < 1 || r >= n) {
            throw std::invalid_argument("experiment: requires 1 <= r < n at every grid point");
        }
    }
    for (double gap : cfg.gap_list) {
        if (!(gap >= 1.0) || !std::isfinite(gap)) {
            throw std::invalid_argument("experiment: gaps must be finite and >= 1");
        }
    }
}

std::vector<GridPoint> make_grid(const ExperimentConfig& cfg) {
    std::vector<GridPoint> grid;
    std::size_t index = 0;
    if (cfg.mode == ExperimentConfig::Mode::vary_dim) {
        for (std::size_t n : cfg.n_list) grid.push_back({n, cfg.gap_list[0], index++});
    } else {
        for (double gap : cfg.gap_list) grid.push_back({cfg.n_list[0], gap, index++});
    }
    return grid;
}

// Every trial owns rng streams derived from (grid index, trial index, role),
// so results do not depend on scheduling.
constexpr std::uint64_t kRoleBuild = 0;   // matrix or chain construction
constexpr std::uint64_t kRoleSketch = 1;  // the factorization's Haar draw

std::uint64_t trial_stream(std::size_t grid_index, std::size_t trial, std::uint64_t role) {
    return (static_cast<std::uint64_t>(grid_index) << 33) +
           (static_cast<std::uint64_t>(trial) << 1) + role;
}

void parallel_for_trials(std::size_t count, std::size_t jobs,
                         const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t t = 0; t < count; ++t) fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            const std::size_t t = next.fetch_add(1);
            if (t >= count) return;
            try {
                fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

void attach_bounds(GridPointResult& res, double delta) {
    res.bounds_valid = res.r > 30 && res.n > res.r && res.n - res.r > 30;
    if (res.bounds_valid) {
        res.bounds = theorem_bounds(res.r, res.n, delta, res.gap);
    } else {
        res.bounds.r = res.r;
        res.bounds.n = res.n;
        res.bounds.delta = delta;
        res.bounds.gap = res.gap;
        res.bounds.b1 = kInf;
        res.bounds.b2 = kInf;
    }
    res.det = deterministic_bounds(res.spectrum, res.r);
}

}  // namespace

std::vector<GridPointResult> run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const std::vector<GridPoint> grid = make_grid(cfg);

    std::vector<GridPointResult> results;
    results.reserve(grid.size());
    for (const GridPoint& g : grid) {
        GridPointResult res;
        res.n = g.n;
        res.gap = g.gap;
        res.r = cfg.r ? *cfg.r : g.n / 2;
        try {
            SpectrumSpec spec{cfg.dist, g.n, res.r, g.gap, cfg.top};
            res.spectrum = realize_spectrum(spec);
            res.records.assign(cfg.trials, TrialRecord{});
            const std::vector<double>& sigma = res.spectrum;
            const std::size_t r = res.r;
            parallel_for_trials(cfg.trials, cfg.jobs, [&](std::size_t t) {
                SeededRng build_rng(cfg.seed, trial_stream(g.index, t, kRoleBuild));
                Matrix a = synthesize_matrix(sigma, build_rng);
                SeededRng sketch_rng(cfg.seed, trial_stream(g.index, t, kRoleSketch));
                RurvResult f = rurv(a, sketch_rng);
                TrialRecord rec = rank_reveal_metrics(sigma, a, f, r);
                rec.trial_index = t;
                res.records[t] = rec;
            });
            attach_bounds(res, cfg.delta);
            res.summary = summarize(res.records, res.bounds, cfg.percentile);
        } catch (const std::exception& e) {
            res.error = e.what();
            res.records.clear();
        }
        results.push_back(std::move(res));
    }
    return results;
}

BuiltChain build_product_chain(const std::vector<double>& sigma,
                               const std::vector<int>& pattern, SeededRng& rng) {
    const std::size_t n = sigma.size();
    const std::size_t k = pattern.size();
    if (n == 0 || k == 0) {
        throw std::invalid_argument("build_product_chain: empty spectrum or pattern");
    }
    for (int m : pattern) {
        if (m != 1 && m != -1) {
            throw std::invalid_argument("build_product_chain: pattern entries must be +1 or -1");
        }
    }
    for (double s : sigma) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw std::invalid_argument("build_product_chain: spectrum must be positive and finite");
        }
    }

    // Each factor carries the k-th root of the target spectrum, so the
    // telescoped product P_1 D^k P_{k+1}^T has (up to roundoff) spectrum sigma
    // and each factor has condition number cond(sigma)^(1/k).
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = std::pow(sigma[i], 1.0 / static_cast<double>(k));
    }

    std::vector<Matrix> p;
    p.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) p.push_back(sample_haar_orthogonal(n, rng));

    BuiltChain out;
    out.chain.entries.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Matrix scaled;
        if (pattern[i] == 1) {
            // A_i = P_i D P_{i+1}^T
            scaled = transpose(p[i + 1]);
            for (std::size_t row = 0; row < n; ++row) {
                double* prow = scaled.row(row);
                for (std::size_t col = 0; col < n; ++col) prow[col] *= d[row];
            }
            out.chain.entries.push_back({gemm(p[i], scaled), 1});
        } else {
            // Stored so that A_i^{-1} = P_i D P_{i+1}^T appears in the product.
            scaled = transpose(p[i]);
            for (std::size_t row = 0; row < n; ++row) {
                double* prow = scaled.row(row);
                for (std::size_t col = 0; col < n; ++col) prow[col] /= d[row];
            }
            out.chain.entries.push_back({gemm(p[i + 1], scaled), -1});
        }
    }

    std::vector<double> dprod(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) dprod[i] *= d[i];
    }
    Matrix scaled = transpose(p[k]);
    for (std::size_t row = 0; row < n; ++row) {
        double* prow = scaled.row(row);
        for (std::size_t col = 0; col < n; ++col) prow[col] *= dprod[row];
    }
    out.product = gemm(p[0], scaled);
    return out;
}

Matrix explicit_chain_product(const FactorChain& chain) {
    if (chain.entries.empty()) {
        throw std::invalid_argument("explicit_chain_product: empty chain");
    }
    const std::size_t n = chain.dim();
    Matrix x = Matrix::identity(n);
    for (std::size_t ii = chain.entries.size(); ii-- > 0;) {
        const FactorChain::Entry& e = chain.entries[ii];
        if (e.exponent == 1) {
            x = gemm(e.matrix, x);
        } else {
            QrFactors f = householder_qr(e.matrix);
            x = solve_upper_triangular(f.r, gemm(transpose(f.q), x));
        }
    }
    return x;
}

std::vector<GridPointResult> run_grurv_experiment(const ExperimentConfig& cfg,
                                                  const ChainSpec& chain) {
    validate_config(cfg);
    if (chain.k < 1) {
        throw std::invalid_argument("grurv experiment: k must be >= 1");
    }
    std::vector<int> pattern = chain.pattern;
    if (pattern.empty()) pattern.assign(chain.k, 1);
    if (pattern.size() != chain.k) {
        throw std::invalid_argument("grurv experiment: pattern length must equal k");
    }
    for (int m : pattern) {
        if (m != 1 && m != -1) {
            throw std::invalid_argument("grurv experiment: pattern entries must be +1 or -1");
        }
    }
    if (chain.oracle_every < 1) {
        throw std::invalid_argument("grurv experiment: oracle stride must be >= 1");
    }
    if (!(chain.factor_condition >= 1.0)) {
        throw std::invalid_argument("grurv experiment: factor condition bound must be >= 1");
    }

    const std::vector<GridPoint> grid = make_grid(cfg);
    std::vector<GridPointResult> results;
    results.reserve(grid.size());
    for (const GridPoint& g : grid) {
        GridPointResult res;
        res.n = g.n;
        res.gap = g.gap;
        res.r = cfg.r ? *cfg.r : g.n / 2;
        try {
            SpectrumSpec spec{cfg.dist, g.n, res.r, g.gap, cfg.top};
            res.spectrum = realize_spectrum(spec);
            const std::vector<double>& sigma = res.spectrum;
            const std::size_t r = res.r;
            const double factor_cond = std::pow(sigma.front() / sigma.back(),
                                                1.0 / static_cast<double>(chain.k));
            const bool oracle_on =
                g.n <= 25 && factor_cond <= chain.factor_condition * (1.0 + 1e-12);

            res.records.assign(cfg.trials, TrialRecord{});
            std::vector<double> oracle(cfg.trials, kNan);
            parallel_for_trials(cfg.trials, cfg.jobs, [&](std::size_t t) {
                SeededRng build_rng(cfg.seed, trial_stream(g.index, t, kRoleBuild));
                BuiltChain built = build_product_chain(sigma, pattern, build_rng);
                SeededRng sketch_rng(cfg.seed, trial_stream(g.index, t, kRoleSketch));
                GrurvResult gres = grurv(built.chain, sketch_rng);
                TrialRecord rec = implicit_rank_metrics(sigma, gres, r, &built.product);
                rec.trial_index = t;
                res.records[t] = rec;
                if (oracle_on && t % chain.oracle_every == 0) {
                    Matrix reference = explicit_chain_product(built.chain);
                    oracle[t] = backward_error(reference, gres.u_current, assemble_r(gres),
                                               gres.v);
                }
            });
            for (double v : oracle) {
                if (!std::isnan(v)) res.oracle_errors.push_back(v);
            }
            attach_bounds(res, cfg.delta);
            res.summary = summarize(res.records, res.bounds, cfg.percentile);
        } catch (const std::exception& e) {
            res.error = e.what();
            res.records.clear();
            res.oracle_errors.clear();
        }
        results.push_back(std::move(res));
    }
    return results;
}

McResult run_mc_svalue(const McConfig& cfg) {
    if (cfg.r < 1 || cfg.r >= cfg.n) {
        throw std::invalid_argument("mc-svalue: requires 1 <= r < n");
    }
    if (cfg.trials < 1) {
        throw std::invalid_argument("mc-svalue: trials must be >= 1");
    }
    if (cfg.jobs < 1) {
        throw std::invalid_argument("mc-svalue: jobs must be >= 1");
    }
    if (cfg.with_bound && (cfg.r <= 30 || cfg.n - cfg.r <= 30)) {
        throw std::invalid_argument(
            "mc-svalue: the tail bound needs r > 30 and n - r > 30; rerun without bounds");
    }
    for (double delta : cfg.deltas) {
        if (!(delta > 0.0 && delta < 1.0)) {
            throw std::invalid_argument("mc-svalue: requires 0 < delta < 1");
        }
    }

    McResult out;
    out.config = cfg;
    out.samples.assign(cfg.trials, 0.0);
    parallel_for_trials(cfg.trials, cfg.jobs, [&](std::size_t t) {
        SeededRng rng(cfg.seed, t);
        out.samples[t] = sample_corner_smin(cfg.n, cfg.r, rng);
    });

    const double scale = std::sqrt(static_cast<double>(cfg.r) *
                                   static_cast<double>(cfg.n - cfg.r));
    for (double delta : cfg.deltas) {
        McRow row;
        row.delta = delta;
        row.threshold = delta / scale;
        row.count = static_cast<std::size_t>(
            std::count_if(out.samples.begin(), out.samples.end(),
                          [&](double s) { return s <= row.threshold; }));
        row.empirical = static_cast<double>(row.count) / static_cast<double>(cfg.trials);
        if (cfg.with_bound) {
            row.bound = tail_probability_bound(cfg.r, cfg.n, delta);
            row.ci_slack = 3.0 * std::sqrt(row.bound / static_cast<double>(cfg.trials));
        } else {
            row.bound = kNan;
            row.ci_slack = kNan;
        }
        out.rows.push_back(row);
    }
    return out;
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("emit_report: cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void check_stream(const std::ofstream& out, const std::filesystem::path& path) {
    if (!out) {
        throw IoError("emit_report: write failed for '" + path.string() + "'");
    }
}

void write_records_csv(const std::filesystem::path& path,
                       const std::vector<GridPointResult>& results) {
    std::ofstream out = open_output(path);
    out << "grid_n,grid_gap,trial,ratio1,ratio2,norm3,backward_error,orth_u,orth_v,flagged\n";
    for (const GridPointResult& res : results) {
        if (!res.error.empty()) continue;
        for (const TrialRecord& rec : res.records) {
            out << res.n << ',' << format_double(res.gap) << ',' << rec.trial_index << ','
                << format_double(rec.ratio1) << ',' << format_double(rec.ratio2) << ','
                << format_double(rec.norm3) << ',' << format_double(rec.backward_error) << ','
                << format_double(rec.orth_u) << ',' << format_double(rec.orth_v) << ','
                << (rec.flagged ? 1 : 0) << '\n';
        }
    }
    check_stream(out, path);
}

struct MetricRow {
    const char* name;
    const MetricStats* stats;
    double bound;
    double det;
};

std::vector<MetricRow> metric_rows(const GridPointResult& res) {
    double norm3_bound = kNan;
    if (res.bounds_valid) {
        if (res.bounds.b4_applicable && res.bounds.b4) {
            norm3_bound = *res.bounds.b4;
        } else if (res.bounds.b3) {
            norm3_bound = *res.bounds.b3;
        }
    }
    return {
        {"ratio1", &res.summary.ratio1, res.bounds_valid ? res.bounds.b1 : kNan, res.det.d1},
        {"ratio2", &res.summary.ratio2, res.bounds_valid ? res.bounds.b2 : kNan, res.det.d2},
        {"norm3", &res.summary.norm3, norm3_bound, res.det.d3},
        {"backward_error", &res.summary.backward_error, kNan, kNan},
    };
}

void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<GridPointResult>& results,
                       const ExperimentConfig& cfg) {
    std::ofstream out = open_output(path);
    out << "n,gap,r,dist,trials,count,singular,percentile,metric,min,q1,median,q3,ptail,max,"
           "bound,det_bound,exceed,error\n";
    for (const GridPointResult& res : results) {
        if (!res.error.empty()) {
            std::string msg = res.error;
            std::replace(msg.begin(), msg.end(), '"', '\'');
            std::replace(msg.begin(), msg.end(), ',', ';');
            out << res.n << ',' << format_double(res.gap) << ',' << res.r << ','
                << dist_name(cfg.dist) << ',' << cfg.trials
                << ",0,0," << format_double(cfg.percentile)
                << ",none,,,,,,,,,,\"" << msg << "\"\n";
            continue;
        }
        for (const MetricRow& row : metric_rows(res)) {
            out << res.n << ',' << format_double(res.gap) << ',' << res.r << ','
                << dist_name(cfg.dist) << ',' << cfg.trials << ',' << res.summary.count << ','
                << res.summary.singular_count << ',' << format_double(res.summary.percentile)
                << ',' << row.name << ',' << format_double(row.stats->min) << ','
                << format_double(row.stats->q1) << ',' << format_double(row.stats->median)
                << ',' << format_double(row.stats->q3) << ',' << format_double(row.stats->p97)
                << ',' << format_double(row.stats->max) << ',' << format_double(row.bound)
                << ',' << format_double(row.det) << ',' << row.stats->exceed_count << ",\n";
        }
    }
    check_stream(out, path);
}

nlohmann::json stats_json(const MetricStats& s) {
    return nlohmann::json{{"min", s.min},   {"q1", s.q1},   {"median", s.median},
                          {"q3", s.q3},     {"p97", s.p97}, {"max", s.max},
                          {"exceed", s.exceed_count}};
}

void write_summary_json(const std::filesystem::path& path,
                        const std::vector<GridPointResult>& results,
                        const ExperimentConfig& cfg) {
    nlohmann::json root = nlohmann::json::array();
    for (const GridPointResult& res : results) {
        nlohmann::json point{{"n", res.n}, {"gap", res.gap}, {"r", res.r},
                             {"dist", dist_name(cfg.dist)}, {"trials", cfg.trials}};
        if (!res.error.empty()) {
            point["error"] = res.error;
            root.push_back(std::move(point));
            continue;
        }
        point["count"] = res.summary.count;
        point["singular_count"] = res.summary.singular_count;
        point["percentile"] = res.summary.percentile;
        nlohmann::json bounds{{"valid", res.bounds_valid}, {"delta", res.bounds.delta}};
        if (res.bounds_valid) {
            bounds["b1"] = res.bounds.b1;
            bounds["b2"] = res.bounds.b2;
            if (res.bounds.b3) bounds["b3"] = *res.bounds.b3;
            bounds["b4_applicable"] = res.bounds.b4_applicable;
            if (res.bounds.b4) bounds["b4"] = *res.bounds.b4;
        }
        point["bounds"] = std::move(bounds);
        point["deterministic"] =
            nlohmann::json{{"d1", res.det.d1}, {"d2", res.det.d2}, {"d3", res.det.d3}};
        point["metrics"] = nlohmann::json{{"ratio1", stats_json(res.summary.ratio1)},
                                          {"ratio2", stats_json(res.summary.ratio2)},
                                          {"norm3", stats_json(res.summary.norm3)},
                                          {"backward_error",
                                           stats_json(res.summary.backward_error)}};
        if (!res.oracle_errors.empty()) {
            point["oracle"] = nlohmann::json{
                {"count", res.oracle_errors.size()},
                {"max_error",
                 *std::max_element(res.oracle_errors.begin(), res.oracle_errors.end())}};
        }
        root.push_back(std::move(point));
    }
    std::ofstream out = open_output(path);
    out << root.dump(2) << '\n';
    check_stream(out, path);
}

void write_histogram_csv(const std::filesystem::path& path,
                         const std::vector<GridPointResult>& results) {
    constexpr std::size_t kBins = 64;
    std::ofstream out = open_output(path);
    out << "metric,grid_n,grid_gap,bin,log10_lo,log10_hi,count\n";
    for (const GridPointResult& res : results) {
        if (!res.error.empty()) continue;
        const std::pair<const char*, double TrialRecord::*> metrics[] = {
            {"ratio1", &TrialRecord::ratio1},
            {"ratio2", &TrialRecord::ratio2},
            {"norm3", &TrialRecord::norm3},
            {"backward_error", &TrialRecord::backward_error},
        };
        for (const auto& [name, member] : metrics) {
            std::vector<double> logs;
            for (const TrialRecord& rec : res.records) {
                const double v = rec.*member;
                if (rec.flagged || !(v > 0.0) || !std::isfinite(v)) continue;
                logs.push_back(std::log10(v));
            }
            if (logs.empty()) continue;
            const double lo = *std::min_element(logs.begin(), logs.end());
            const double hi = *std::max_element(logs.begin(), logs.end());
            std::vector<std::size_t> counts(kBins, 0);
            const double width = (hi - lo) / static_cast<double>(kBins);
            for (double v : logs) {
                std::size_t bin = 0;
                if (width > 0.0) {
                    bin = std::min(kBins - 1,
                                   static_cast<std::size_t>((v - lo) / width));
                }
                ++counts[bin];
            }
            for (std::size_t b = 0; b < kBins; ++b) {
                out << name << ',' << res.n << ',' << format_double(res.gap) << ',' << b << ','
                    << format_double(lo + width * static_cast<double>(b)) << ','
                    << format_double(lo + width * static_cast<double>(b + 1)) << ','
                    << counts[b] << '\n';
            }
        }
    }
    check_stream(out, path);
}

void write_spectrum_csv(const std::filesystem::path& path,
                        const std::vector<GridPointResult>& results) {
    std::ofstream out = open_output(path);
    out << "grid_n,grid_gap,index,sigma\n";
    for (const GridPointResult& res : results) {
        if (!res.error.empty()) continue;
        for (std::size_t i = 0; i < res.spectrum.size(); ++i) {
            out << res.n << ',' << format_double(res.gap) << ',' << i + 1 << ','
                << format_double(res.spectrum[i]) << '\n';
        }
    }
    check_stream(out, path);
}

void write_plotdata_svg(const std::filesystem::path& path,
                        const std::vector<GridPointResult>& results,
                        const ExperimentConfig& cfg) {
    std::vector<const GridPointResult*> ok;
    for (const GridPointResult& res : results) {
        if (res.error.empty()) ok.push_back(&res);
    }
    if (ok.empty()) return;

    const double panel_w = 120.0 + 70.0 * static_cast<double>(ok.size());
    const double panel_h = 230.0;
    const double total_h = panel_h * 3.0 + 40.0;
    std::ofstream out = open_output(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << panel_w << "\" height=\""
        << total_h << "\" viewBox=\"0 0 " << panel_w << ' ' << total_h << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const struct {
        const char* name;
        const MetricStats Summary::*stats;
        int slot;
    } panels[] = {
        {"ratio1", &Summary::ratio1, 0},
        {"ratio2", &Summary::ratio2, 1},
        {"norm3", &Summary::norm3, 2},
    };

    for (const auto& panel : panels) {
        const double top = 20.0 + panel_h * panel.slot;
        const double plot_top = top + 20.0;
        const double plot_h = panel_h - 60.0;

        double lo = kInf, hi = -kInf;
        for (const GridPointResult* res : ok) {
            const MetricStats& s = res->summary.*panel.stats;
            if (s.min > 0.0) lo = std::min(lo, std::log10(s.min));
            if (s.max > 0.0) hi = std::max(hi, std::log10(s.max));
            const std::vector<MetricRow> rows = metric_rows(*res);
            for (const MetricRow& row : rows) {
                if (std::string(row.name) == panel.name && std::isfinite(row.bound) &&
                    row.bound > 0.0) {
                    hi = std::max(hi, std::log10(row.bound));
                }
            }
        }
        if (!(hi > lo)) {
            lo = (std::isfinite(lo) ? lo : 0.0) - 1.0;
            hi = lo + 2.0;
        }
        const double span = hi - lo;
        auto y_of = [&](double value) {
            return plot_top + plot_h * (1.0 - (std::log10(value) - lo) / span);
        };

        out << "<text x=\"12\" y=\"" << top + 8.0 << "\" font-size=\"13\" font-family=\"sans-serif\">"
            << panel.name << " (log10 scale " << format_double(lo) << " .. "
            << format_double(hi) << ")</text>\n";

        for (std::size_t i = 0; i < ok.size(); ++i) {
            const GridPointResult* res = ok[i];
            const MetricStats& s = res->summary.*panel.stats;
            const double cx = 90.0 + 70.0 * static_cast<double>(i);
            if (s.min <= 0.0) continue;  // log panel cannot place nonpositive data

            out << "<line x1=\"" << cx << "\" y1=\"" << y_of(s.min) << "\" x2=\"" << cx
                << "\" y2=\"" << y_of(s.max) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
            const double box_top = y_of(s.q3);
            const double box_bot = y_of(s.q1);
            out << "<rect x=\"" << cx - 14.0 << "\" y=\"" << box_top << "\" width=\"28\" height=\""
                << std::max(1.0, box_bot - box_top)
                << "\" fill=\"#9ecae1\" stroke=\"black\" stroke-width=\"1\"/>\n";
            out << "<line x1=\"" << cx - 14.0 << "\" y1=\"" << y_of(s.median) << "\" x2=\""
                << cx + 14.0 << "\" y2=\"" << y_of(s.median)
                << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
            out << "<line x1=\"" << cx - 18.0 << "\" y1=\"" << y_of(s.p97) << "\" x2=\""
                << cx + 18.0 << "\" y2=\"" << y_of(s.p97)
                << "\" stroke=\"#2c2c2c\" stroke-width=\"1.5\" stroke-dasharray=\"5,2\"/>\n";

            for (const MetricRow& row : metric_rows(*res)) {
                if (std::string(row.name) == panel.name && std::isfinite(row.bound) &&
                    row.bound > 0.0) {
                    out << "<line x1=\"" << cx - 22.0 << "\" y1=\"" << y_of(row.bound)
                        << "\" x2=\"" << cx + 22.0 << "\" y2=\"" << y_of(row.bound)
                        << "\" stroke=\"#1f6fbf\" stroke-width=\"2\"/>\n";
                }
            }
            std::ostringstream label;
            if (cfg.mode == ExperimentConfig::Mode::vary_gap) {
                label << "g=1e" << static_cast<int>(std::lround(std::log10(res->gap)));
            } else {
                label << "n=" << res->n;
            }
            out << "<text x=\"" << cx << "\" y=\"" << plot_top + plot_h + 16.0
                << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">"
                << label.str() << "</text>\n";
        }
    }
    out << "</svg>\n";
    check_stream(out, path);
}

void echo_results(const std::vector<GridPointResult>& results, const ExperimentConfig& cfg,
                  std::ostream& os) {
    for (const GridPointResult& res : results) {
        os << "grid point n=" << res.n << " gap=" << format_double(res.gap) << " r=" << res.r
           << " dist=" << dist_name(cfg.dist) << " trials=" << cfg.trials;
        if (!res.error.empty()) {
            os << " FAILED: " << res.error << '\n';
            continue;
        }
        os << " singular=" << res.summary.singular_count << '\n';
        os << "  metric           median            p" << std::lround(cfg.percentile * 100)
           << "             bound            exceed\n";
        for (const MetricRow& row : metric_rows(res)) {
            os << "  " << row.name;
            for (std::size_t pad = std::string(row.name).size(); pad < 17; ++pad) os << ' ';
            os << format_double(row.stats->median) << "  " << format_double(row.stats->p97)
               << "  ";
            if (std::isfinite(row.bound)) {
                os << format_double(row.bound) << "  " << row.stats->exceed_count;
            } else {
                os << "-  -";
            }
            os << '\n';
        }
        if (!res.oracle_errors.empty()) {
            os << "  oracle reconstruction: count=" << res.oracle_errors.size() << " max="
               << format_double(
                      *std::max_element(res.oracle_errors.begin(), res.oracle_errors.end()))
               << '\n';
        }
    }
}

}  // namespace

void emit_report(const std::vector<GridPointResult>& results, const ExperimentConfig& cfg,
                 std::ostream& echo) {
    if (results.empty()) {
        throw std::invalid_argument("emit_report: empty result list");
    }
    echo_results(results, cfg, echo);
    if (cfg.out.empty()) return;

    const std::filesystem::path dir(cfg.out);
    try {
        std::filesystem::create_directories(dir);
    } catch (const std::filesystem::filesystem_error& e) {
        throw IoError(std::string("emit_report: cannot create output directory: ") + e.what());
    }

    write_records_csv(dir / "records.csv", results);
    if (cfg.format == ExperimentConfig::Format::json) {
        write_summary_json(dir / "summary.json", results, cfg);
    } else {
        write_summary_csv(dir / "summary.csv", results, cfg);
    }
    write_histogram_csv(dir / "histogram.csv", results);
    write_spectrum_csv(dir / "spectrum.csv", results);
    if (cfg.svg) {
        write_plotdata_svg(dir / "plotdata.svg", results, cfg);
    }
}

void emit_mc_report(const McResult& result, const std::string& out_dir, std::ostream& echo) {
    echo << "corner smin study r=" << result.config.r << " n=" << result.config.n
         << " trials=" << result.config.trials << '\n';
    echo << "  delta        threshold          count  empirical        bound       bound+slack\n";
    for (const McRow& row : result.rows) {
        echo << "  " << format_double(row.delta) << "  " << format_double(row.threshold) << "  "
             << row.count << "  " << format_double(row.empirical) << "  ";
        if (std::isnan(row.bound)) {
            echo << "-  -\n";
        } else {
            echo << format_double(row.bound) << "  " << format_double(row.bound + row.ci_slack)
                 << '\n';
        }
    }
    if (out_dir.empty()) return;

    const std::filesystem::path dir(out_dir);
    try {
        std::filesystem::create_directories(dir);
    } catch (const std::filesystem::filesystem_error& e) {
        throw IoError(std::string("emit_mc_report: cannot create output directory: ") +
                      e.what());
    }

    {
        std::ofstream out = open_output(dir / "mc_samples.csv");
        out << "trial,s,s_squared\n";
        for (std::size_t t = 0; t < result.samples.size(); ++t) {
            const double s = result.samples[t];
            out << t << ',' << format_double(s) << ',' << format_double(s * s) << '\n';
        }
        check_stream(out, dir / "mc_samples.csv");
    }
    {
        std::ofstream out = open_output(dir / "mc_table.csv");
        out << "delta,threshold,count,empirical,bound,ci_slack\n";
        for (const McRow& row : result.rows) {
            out << format_double(row.delta) << ',' << format_double(row.threshold) << ','
                << row.count << ',' << format_double(row.empirical) << ','
                << format_double(row.bound) << ',' << format_double(row.ci_slack) << '\n';
        }
        check_stream(out, dir / "mc_table.csv");
    }
    {
        constexpr std::size_t kBins = 64;
        std::vector<std::size_t> counts(kBins, 0);
        for (double s : result.samples) {
            const double sq = std::min(s * s, 1.0);
            const std::size_t bin =
                std::min(kBins - 1, static_cast<std::size_t>(sq * static_cast<double>(kBins)));
            ++counts[bin];
        }
        std::ofstream out = open_output(dir / "mc_histogram.csv");
        out << "bin,s_squared_lo,s_squared_hi,count\n";
        for (std::size_t b = 0; b < kBins; ++b) {
            out << b << ',' << format_double(static_cast<double>(b) / kBins) << ','
                << format_double(static_cast<double>(b + 1) / kBins) << ',' << counts[b]
                << '\n';
        }
        check_stream(out, dir / "mc_histogram.csv");
    }
}

void print_bounds_table(std::size_t n, std::size_t r, double delta,
                        std::optional<double> gap, SpectrumSpec::Kind dist, double top,
                        std::ostream& os) {
    const BoundSet b = theorem_bounds(r, n, delta, gap);
    os << "bounds at n=" << n << " r=" << r << " delta=" << format_double(delta);
    if (gap) os << " gap=" << format_double(*gap) << " dist=" << dist_name(dist);
    os << '\n';

    std::optional<DeterministicBounds> det;
    if (gap) {
        SpectrumSpec spec{dist, n, r, *gap, top};
        det = deterministic_bounds(realize_spectrum(spec), r);
    }

    os << "  quantity               probabilistic         deterministic\n";
    os << "  sigma_r/smin(R11)      b1=" << format_double(b.b1) << "          ";
    os << (det ? "d1=" + format_double(det->d1) : std::string("-")) << '\n';
    os << "  smax(R22)/sigma_r+1    b2=" << format_double(b.b2) << "          ";
    os << (det ? "d2=" + format_double(det->d2) : std::string("-")) << '\n';
    os << "  |R11^-1 R12|_2         ";
    if (b.b4_applicable && b.b4) {
        os << "b4=" << format_double(*b.b4) << " (b3=" << format_double(*b.b3) << ")";
    } else if (b.b3) {
        os << "b3=" << format_double(*b.b3) << " (b4 n/a)";
    } else {
        os << "- (needs gap)";
    }
    os << "          " << (det ? "d3=" + format_double(det->d3) : std::string("-")) << '\n';
}

}  // namespace randurv
