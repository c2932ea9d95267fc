#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "randurv/bounds.hpp"
#include "randurv/grurv.hpp"
#include "randurv/metrics.hpp"
#include "randurv/synth.hpp"

namespace randurv {

// One Monte Carlo experiment: a grid of (n, gap) points, each running
// `trials` independent synthesize-factor-measure trials.  vary_gap fixes one
// n and lists gaps, vary_dim fixes one gap and lists n, single has one of
// each.  Every trial draws from rng streams keyed by (seed, grid index,
// trial index), so results are independent of execution order and worker
// count.
struct ExperimentConfig {
    enum class Mode { single, vary_gap, vary_dim };
    enum class Format { csv, json };

    Mode mode = Mode::single;
    SpectrumSpec::Kind dist = SpectrumSpec::Kind::stair;
    std::vector<std::size_t> n_list{300};
    std::optional<std::size_t> r;  // default: n/2 per grid point
    std::vector<double> gap_list{1e7};
    double top = 1e13;  // logspace sigma_1
    std::size_t trials = 200;
    double delta = 0.03;
    std::uint64_t seed = 42;
    double percentile = 0.97;
    std::string out;  // output directory; empty writes no files
    Format format = Format::csv;
    std::size_t jobs = 1;
    bool svg = false;
};

// Product-chain shape for the generalized experiment.  Chains are built by
// telescoping Haar factors around diagonal pieces so that the product has
// exactly the engineered spectrum; each factor's condition number is the
// product condition^(1/k).
struct ChainSpec {
    std::size_t k = 2;
    std::vector<int> pattern;       // size k, entries +1/-1; defaults to all +1
    double factor_condition = 1e3;  // cap on each factor's condition number
    std::size_t oracle_every = 10;  // explicit-oracle subsample stride (n <= 25 only)
};

struct GridPointResult {
    std::size_t n = 0;
    double gap = 0.0;
    std::size_t r = 0;
    std::vector<double> spectrum;
    std::vector<TrialRecord> records;
    Summary summary;
    BoundSet bounds;
    bool bounds_valid = false;  // theorem bounds need r, n-r > 30
    DeterministicBounds det;
    std::vector<double> oracle_errors;  // product runs only, subsampled
    std::string error;  // nonempty: this grid point failed and carries no data
};

std::vector<GridPointResult> run_experiment(const ExperimentConfig& cfg);

std::vector<GridPointResult> run_grurv_experiment(const ExperimentConfig& cfg,
                                                  const ChainSpec& chain);

// A factor chain together with its exact reference product (assembled from
// the construction's own orthogonal and diagonal pieces, never by inverting).
struct BuiltChain {
    FactorChain chain;
    Matrix product;
};

// Telescoped chain A_i = P_i D_i P_{i+1}^T (inverted entries stored as
// P_{i+1} D_i^{-1} P_i^T) whose product is exactly P_1 diag(sigma) P_{k+1}^T.
BuiltChain build_product_chain(const std::vector<double>& sigma,
                               const std::vector<int>& pattern, SeededRng& rng);

// Explicit chain product for test oracles: inverted factors are applied by QR
// factorization plus triangular solve.
Matrix explicit_chain_product(const FactorChain& chain);

// Monte Carlo study of the corner smallest singular value s at (r, n).
struct McConfig {
    std::size_t r = 40;
    std::size_t n = 80;
    std::size_t trials = 5000;
    std::vector<double> deltas{0.01, 0.05, 0.1};
    std::uint64_t seed = 42;
    bool with_bound = true;  // requires r, n-r > 30
    std::size_t jobs = 1;
};

struct McRow {
    double delta = 0.0;
    double threshold = 0.0;  // delta / sqrt(r (n-r))
    std::size_t count = 0;   // samples <= threshold
    double empirical = 0.0;
    double bound = 0.0;      // NaN when bounds are disabled
    double ci_slack = 0.0;   // 3 sqrt(bound / trials)
};

struct McResult {
    McConfig config;
    std::vector<double> samples;  // s values in trial order
    std::vector<McRow> rows;
};

McResult run_mc_svalue(const McConfig& cfg);

// Echoes the run to `echo` and, when cfg.out is nonempty, writes records.csv,
// summary.{csv|json}, histogram.csv, spectrum.csv, and optionally
// plotdata.svg under it.  Throws on an empty result list before writing.
void emit_report(const std::vector<GridPointResult>& results, const ExperimentConfig& cfg,
                 std::ostream& echo);

void emit_mc_report(const McResult& result, const std::string& out_dir, std::ostream& echo);

// Side-by-side table of the probabilistic bound set and the deterministic
// envelopes of the realized spectrum.
void print_bounds_table(std::size_t n, std::size_t r, double delta,
                        std::optional<double> gap, SpectrumSpec::Kind dist, double top,
                        std::ostream& os);

}  // namespace randurv
