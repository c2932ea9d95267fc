// Command line front end for the factorization library and its experiments.
//
// Subcommands:
//   factor            one randomized URV of a matrix read from a file
//   grurv             implicit factorization of a product chain read from files
//   experiment        Monte Carlo rank-revealing study over an (n, gap) grid
//   grurv-experiment  the same study on engineered product chains
//   mc-svalue         corner singular value tail study
//   bounds            tabulate probabilistic and deterministic bounds
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 4 I/O failure.

#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "randurv/decompose.hpp"
#include "randurv/error.hpp"
#include "randurv/experiment.hpp"
#include "randurv/matrix_io.hpp"

namespace {

using randurv::ExperimentConfig;
using randurv::SpectrumSpec;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

std::vector<std::size_t> parse_size_list(const std::string& text, const char* flag) {
    std::vector<std::size_t> out;
    for (const std::string& item : split_list(text)) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(item, &pos);
            if (pos != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(flag) + ": cannot parse '" + item +
                                        "' as a nonnegative integer");
        }
    }
    if (out.empty()) {
        throw std::invalid_argument(std::string(flag) + ": empty list");
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text, const char* flag) {
    std::vector<double> out;
    for (const std::string& item : split_list(text)) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(flag) + ": cannot parse '" + item +
                                        "' as a number");
        }
    }
    if (out.empty()) {
        throw std::invalid_argument(std::string(flag) + ": empty list");
    }
    return out;
}

std::vector<int> parse_pattern(const std::string& text) {
    std::vector<int> out;
    for (const std::string& item : split_list(text)) {
        if (item == "1" || item == "+1") {
            out.push_back(1);
        } else if (item == "-1") {
            out.push_back(-1);
        } else {
            throw std::invalid_argument("--pattern: entries must be +1 or -1, got '" + item +
                                        "'");
        }
    }
    return out;
}

SpectrumSpec::Kind parse_dist(const std::string& name) {
    if (name == "stair") return SpectrumSpec::Kind::stair;
    if (name == "logspace") return SpectrumSpec::Kind::logspace;
    throw std::invalid_argument("--dist must be stair or logspace, got '" + name + "'");
}

ExperimentConfig::Format parse_format(const std::string& name) {
    if (name == "csv") return ExperimentConfig::Format::csv;
    if (name == "json") return ExperimentConfig::Format::json;
    throw std::invalid_argument("--format must be csv or json, got '" + name + "'");
}

ExperimentConfig::Mode parse_mode(const std::string& name) {
    if (name == "single") return ExperimentConfig::Mode::single;
    if (name == "vary-gap") return ExperimentConfig::Mode::vary_gap;
    if (name == "vary-dim") return ExperimentConfig::Mode::vary_dim;
    throw std::invalid_argument("mode must be single, vary-gap, or vary-dim, got '" + name +
                                "'");
}

// Raw CLI flag values; only flags the user actually passed override the
// config file.
struct ExperimentFlags {
    std::string dist;
    std::string n;
    std::int64_t r = 0;
    std::string gap;
    std::int64_t trials = 0;
    double delta = 0.0;
    std::uint64_t seed = 0;
    double percentile = 0.0;
    std::string format;
    std::string out;
    std::int64_t jobs = 0;
    std::string config_path;
    double top = 0.0;
    bool svg = false;

    // grurv-experiment only
    std::int64_t k = 0;
    std::string pattern;
    double factor_cond = 0.0;
    std::int64_t oracle_every = 0;
};

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& f) {
    cmd->add_option("--dist", f.dist, "spectrum profile: stair or logspace");
    cmd->add_option("--n", f.n, "matrix dimension, or comma list for vary-dim");
    cmd->add_option("--r", f.r, "split index (default n/2)");
    cmd->add_option("--gap", f.gap, "spectral gap, or comma list for vary-gap");
    cmd->add_option("--trials", f.trials, "Monte Carlo trials per grid point");
    cmd->add_option("--delta", f.delta, "failure probability parameter in (0,1)");
    cmd->add_option("--seed", f.seed, "rng seed");
    cmd->add_option("--percentile", f.percentile, "report percentile in [0,1]");
    cmd->add_option("--format", f.format, "summary format: csv or json");
    cmd->add_option("--out", f.out, "output directory (omit to skip files)");
    cmd->add_option("--jobs", f.jobs, "worker threads");
    cmd->add_option("--config", f.config_path, "JSON config file; flags override it");
    cmd->add_option("--top", f.top, "largest singular value of the logspace profile");
    cmd->add_flag("--svg", f.svg, "also emit box-plot geometry as plotdata.svg");
}

nlohmann::json load_config_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw randurv::IoError("cannot open config file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config file '" + path + "': " + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("config file '" + path + "' must hold a JSON object");
    }
    return doc;
}

// Applies a JSON config document onto the defaults.  Numeric scalars and
// lists are both accepted where the CLI accepts lists.
void apply_config_json(const nlohmann::json& doc, ExperimentConfig& cfg, bool& mode_set) {
    static const char* kKnown[] = {"mode", "dist", "n",          "r",    "gap",  "top",
                                   "trials", "delta", "seed",    "percentile", "out",
                                   "format", "jobs", "svg"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        bool known = false;
        for (const char* name : kKnown) {
            if (key == name) known = true;
        }
        if (!known && key != "chain") {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    if (doc.contains("mode")) {
        cfg.mode = parse_mode(doc.at("mode").get<std::string>());
        mode_set = true;
    }
    if (doc.contains("dist")) cfg.dist = parse_dist(doc.at("dist").get<std::string>());
    if (doc.contains("n")) {
        const nlohmann::json& v = doc.at("n");
        if (v.is_array()) {
            cfg.n_list = v.get<std::vector<std::size_t>>();
        } else {
            cfg.n_list = {v.get<std::size_t>()};
        }
    }
    if (doc.contains("r")) cfg.r = doc.at("r").get<std::size_t>();
    if (doc.contains("gap")) {
        const nlohmann::json& v = doc.at("gap");
        if (v.is_array()) {
            cfg.gap_list = v.get<std::vector<double>>();
        } else {
            cfg.gap_list = {v.get<double>()};
        }
    }
    if (doc.contains("top")) cfg.top = doc.at("top").get<double>();
    if (doc.contains("trials")) cfg.trials = doc.at("trials").get<std::size_t>();
    if (doc.contains("delta")) cfg.delta = doc.at("delta").get<double>();
    if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("percentile")) cfg.percentile = doc.at("percentile").get<double>();
    if (doc.contains("out")) cfg.out = doc.at("out").get<std::string>();
    if (doc.contains("format")) cfg.format = parse_format(doc.at("format").get<std::string>());
    if (doc.contains("jobs")) cfg.jobs = doc.at("jobs").get<std::size_t>();
    if (doc.contains("svg")) cfg.svg = doc.at("svg").get<bool>();
}

void apply_chain_json(const nlohmann::json& doc, randurv::ChainSpec& chain) {
    if (!doc.contains("chain")) return;
    const nlohmann::json& c = doc.at("chain");
    if (!c.is_object()) {
        throw std::invalid_argument("config: 'chain' must be an object");
    }
    if (c.contains("k")) chain.k = c.at("k").get<std::size_t>();
    if (c.contains("pattern")) chain.pattern = c.at("pattern").get<std::vector<int>>();
    if (c.contains("factor_condition")) {
        chain.factor_condition = c.at("factor_condition").get<double>();
    }
    if (c.contains("oracle_every")) chain.oracle_every = c.at("oracle_every").get<std::size_t>();
}

// Folds file config and passed flags into the final config.  The desk-scale
// default grid (vary-dim over n in {100, 300, 500} at gap 1e7) applies when
// neither source names a grid.
ExperimentConfig resolve_experiment_config(const CLI::App* cmd, const ExperimentFlags& f,
                                           randurv::ChainSpec* chain) {
    ExperimentConfig cfg;
    cfg.n_list = {100, 300, 500};
    cfg.mode = ExperimentConfig::Mode::vary_dim;
    bool mode_set = false;

    if (cmd->count("--config")) {
        const nlohmann::json doc = load_config_json(f.config_path);
        apply_config_json(doc, cfg, mode_set);
        if (chain) apply_chain_json(doc, *chain);
    }

    if (cmd->count("--dist")) cfg.dist = parse_dist(f.dist);
    if (cmd->count("--n")) cfg.n_list = parse_size_list(f.n, "--n");
    if (cmd->count("--r")) {
        if (f.r < 1) throw std::invalid_argument("--r must be >= 1");
        cfg.r = static_cast<std::size_t>(f.r);
    }
    if (cmd->count("--gap")) cfg.gap_list = parse_double_list(f.gap, "--gap");
    if (cmd->count("--top")) cfg.top = f.top;
    if (cmd->count("--trials")) {
        if (f.trials < 1) throw std::invalid_argument("--trials must be >= 1");
        cfg.trials = static_cast<std::size_t>(f.trials);
    }
    if (cmd->count("--delta")) cfg.delta = f.delta;
    if (cmd->count("--seed")) cfg.seed = f.seed;
    if (cmd->count("--percentile")) cfg.percentile = f.percentile;
    if (cmd->count("--format")) cfg.format = parse_format(f.format);
    if (cmd->count("--out")) cfg.out = f.out;
    if (cmd->count("--jobs")) {
        if (f.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
        cfg.jobs = static_cast<std::size_t>(f.jobs);
    }
    if (cmd->count("--svg")) cfg.svg = true;

    if (!mode_set) {
        if (cfg.n_list.size() > 1 && cfg.gap_list.size() > 1) {
            throw std::invalid_argument(
                "experiment: only one of --n and --gap may be a list");
        }
        if (cfg.n_list.size() > 1) {
            cfg.mode = ExperimentConfig::Mode::vary_dim;
        } else if (cfg.gap_list.size() > 1) {
            cfg.mode = ExperimentConfig::Mode::vary_gap;
        } else {
            cfg.mode = ExperimentConfig::Mode::single;
        }
    }

    if (chain) {
        if (cmd->count("--k")) {
            if (f.k < 1) throw std::invalid_argument("--k must be >= 1");
            chain->k = static_cast<std::size_t>(f.k);
        }
        if (cmd->count("--pattern")) chain->pattern = parse_pattern(f.pattern);
        if (chain->pattern.empty()) chain->pattern.assign(chain->k, 1);
        if (chain->pattern.size() != chain->k) {
            if (cmd->count("--pattern") && !cmd->count("--k")) {
                chain->k = chain->pattern.size();
            } else {
                throw std::invalid_argument("--pattern length must equal --k");
            }
        }
        if (cmd->count("--factor-cond")) chain->factor_condition = f.factor_cond;
        if (cmd->count("--oracle-every")) {
            if (f.oracle_every < 1) throw std::invalid_argument("--oracle-every must be >= 1");
            chain->oracle_every = static_cast<std::size_t>(f.oracle_every);
        }
    }
    return cfg;
}

int any_grid_failure(const std::vector<randurv::GridPointResult>& results) {
    for (const randurv::GridPointResult& res : results) {
        if (!res.error.empty()) return 3;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// factor: one randomized URV of a matrix file
// ---------------------------------------------------------------------------

struct FactorArgs {
    std::string input;
    std::uint64_t seed = 42;
    std::int64_t r = 0;
    std::string out;
};

int run_factor(const FactorArgs& args) {
    const randurv::Matrix a = randurv::read_matrix(args.input);
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("factor: input matrix must be square");
    }
    randurv::SeededRng rng(args.seed, 0);
    const randurv::RurvResult f = randurv::rurv(a, rng);

    const double backward = randurv::backward_error(a, f.u, f.r, f.v);
    std::cout << "factor n=" << a.rows() << " seed=" << args.seed << '\n';
    std::cout << "  backward_error=" << randurv::format_double(backward) << '\n';
    std::cout << "  orth_u=" << randurv::format_double(randurv::orthogonality_defect(f.u))
              << " orth_v=" << randurv::format_double(randurv::orthogonality_defect(f.v))
              << '\n';

    if (args.r > 0) {
        const std::size_t r = static_cast<std::size_t>(args.r);
        if (r >= a.rows()) {
            throw std::invalid_argument("factor: requires r < n");
        }
        const std::vector<double> sigma = randurv::jacobi_svd_values(a);
        const randurv::TrialRecord rec = randurv::rank_reveal_metrics(sigma, a, f, r);
        std::cout << "  split r=" << r << " sigma_r=" << randurv::format_double(sigma[r - 1])
                  << " sigma_r+1=" << randurv::format_double(sigma[r]) << '\n';
        std::cout << "  ratio1=" << randurv::format_double(rec.ratio1)
                  << " ratio2=" << randurv::format_double(rec.ratio2)
                  << " norm3=" << randurv::format_double(rec.norm3)
                  << (rec.flagged ? " (leading block numerically singular)" : "") << '\n';
    }

    if (!args.out.empty()) {
        const std::filesystem::path dir(args.out);
        std::filesystem::create_directories(dir);
        randurv::write_matrix((dir / "u.txt").string(), f.u);
        randurv::write_matrix((dir / "r.txt").string(), f.r);
        randurv::write_matrix((dir / "v.txt").string(), f.v);
        std::cout << "  wrote u.txt r.txt v.txt under " << dir.string() << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// grurv: implicit factorization of a chain of matrix files
// ---------------------------------------------------------------------------

struct GrurvArgs {
    std::vector<std::string> inputs;
    std::string pattern;
    std::uint64_t seed = 42;
    std::string out;
    bool no_check = false;
};

int run_grurv(const GrurvArgs& args) {
    if (args.inputs.empty()) {
        throw std::invalid_argument("grurv: at least one input matrix file is required");
    }
    std::vector<int> pattern;
    if (!args.pattern.empty()) {
        pattern = parse_pattern(args.pattern);
        if (pattern.size() != args.inputs.size()) {
            throw std::invalid_argument("grurv: pattern length must match the file count");
        }
    } else {
        pattern.assign(args.inputs.size(), 1);
    }

    randurv::FactorChain chain;
    for (std::size_t i = 0; i < args.inputs.size(); ++i) {
        chain.entries.push_back({randurv::read_matrix(args.inputs[i]), pattern[i]});
    }

    randurv::SeededRng rng(args.seed, 0);
    const randurv::GrurvResult g = randurv::grurv(chain, rng);
    const randurv::Matrix r_total = randurv::assemble_r(g);

    std::cout << "grurv k=" << chain.size() << " n=" << chain.dim() << " seed=" << args.seed
              << '\n';
    std::cout << "  orth_u=" << randurv::format_double(randurv::orthogonality_defect(g.u_current))
              << " orth_v=" << randurv::format_double(randurv::orthogonality_defect(g.v))
              << '\n';
    if (!args.no_check) {
        const randurv::Matrix product = randurv::explicit_chain_product(chain);
        const double backward = randurv::backward_error(product, g.u_current, r_total, g.v);
        std::cout << "  reconstruction_error=" << randurv::format_double(backward) << '\n';
    }

    if (!args.out.empty()) {
        const std::filesystem::path dir(args.out);
        std::filesystem::create_directories(dir);
        randurv::write_matrix((dir / "u.txt").string(), g.u_current);
        randurv::write_matrix((dir / "v.txt").string(), g.v);
        randurv::write_matrix((dir / "r_assembled.txt").string(), r_total);
        for (std::size_t i = 0; i < g.r_list.size(); ++i) {
            randurv::write_matrix((dir / ("r" + std::to_string(i + 1) + ".txt")).string(),
                                  g.r_list[i]);
        }
        std::cout << "  wrote u.txt v.txt r_assembled.txt r1..r" << g.r_list.size()
                  << ".txt under " << dir.string() << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// mc-svalue
// ---------------------------------------------------------------------------

struct McArgs {
    std::int64_t r = 40;
    std::int64_t n = 80;
    std::int64_t trials = 5000;
    std::string deltas;
    std::uint64_t seed = 42;
    bool no_bound = false;
    std::int64_t jobs = 1;
    std::string out;
};

int run_mc(const McArgs& args) {
    randurv::McConfig cfg;
    if (args.r < 1 || args.n < 2) {
        throw std::invalid_argument("mc-svalue: requires r >= 1 and n >= 2");
    }
    cfg.r = static_cast<std::size_t>(args.r);
    cfg.n = static_cast<std::size_t>(args.n);
    if (args.trials < 1) throw std::invalid_argument("--trials must be >= 1");
    cfg.trials = static_cast<std::size_t>(args.trials);
    if (!args.deltas.empty()) cfg.deltas = parse_double_list(args.deltas, "--delta");
    cfg.seed = args.seed;
    cfg.with_bound = !args.no_bound;
    if (args.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
    cfg.jobs = static_cast<std::size_t>(args.jobs);

    const randurv::McResult result = randurv::run_mc_svalue(cfg);
    randurv::emit_mc_report(result, args.out, std::cout);
    return 0;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

struct BoundsArgs {
    std::int64_t n = 300;
    std::int64_t r = 0;
    double delta = 0.03;
    double gap = 0.0;
    std::string dist = "stair";
    double top = 1e13;
    bool gap_given = false;
};

int run_bounds(const BoundsArgs& args) {
    if (args.n < 2) throw std::invalid_argument("--n must be >= 2");
    const std::size_t n = static_cast<std::size_t>(args.n);
    const std::size_t r = args.r > 0 ? static_cast<std::size_t>(args.r) : n / 2;
    std::optional<double> gap;
    if (args.gap_given) gap = args.gap;
    randurv::print_bounds_table(n, r, args.delta, gap, parse_dist(args.dist), args.top,
                                std::cout);
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"randomized rank-revealing factorization toolkit"};
    app.require_subcommand(1);

    FactorArgs factor_args;
    CLI::App* factor_cmd = app.add_subcommand("factor", "randomized URV of a matrix file");
    factor_cmd->add_option("input", factor_args.input, "matrix file (header: rows cols)")
        ->required();
    factor_cmd->add_option("--seed", factor_args.seed, "rng seed");
    factor_cmd->add_option("--r", factor_args.r, "also report split metrics at this index");
    factor_cmd->add_option("--out", factor_args.out, "directory for u.txt, r.txt, v.txt");

    GrurvArgs grurv_args;
    CLI::App* grurv_cmd =
        app.add_subcommand("grurv", "implicit factorization of a product of matrix files");
    grurv_cmd->add_option("inputs", grurv_args.inputs, "matrix files, product order")
        ->required();
    grurv_cmd->add_option("--pattern", grurv_args.pattern,
                          "comma list of +1/-1 exponents, one per file");
    grurv_cmd->add_option("--seed", grurv_args.seed, "rng seed");
    grurv_cmd->add_option("--out", grurv_args.out, "directory for the factor files");
    grurv_cmd->add_flag("--no-check", grurv_args.no_check,
                        "skip the explicit product reconstruction check");

    ExperimentFlags exp_flags;
    CLI::App* exp_cmd =
        app.add_subcommand("experiment", "Monte Carlo rank-revealing study on an (n, gap) grid");
    add_experiment_flags(exp_cmd, exp_flags);

    ExperimentFlags gexp_flags;
    CLI::App* gexp_cmd =
        app.add_subcommand("grurv-experiment", "the same study on engineered product chains");
    add_experiment_flags(gexp_cmd, gexp_flags);
    gexp_cmd->add_option("--k", gexp_flags.k, "chain length");
    gexp_cmd->add_option("--pattern", gexp_flags.pattern, "comma list of +1/-1 exponents");
    gexp_cmd->add_option("--factor-cond", gexp_flags.factor_cond,
                         "per-factor condition cap for the explicit oracle");
    gexp_cmd->add_option("--oracle-every", gexp_flags.oracle_every,
                         "explicit-oracle stride (n <= 25 grid points only)");

    McArgs mc_args;
    CLI::App* mc_cmd = app.add_subcommand("mc-svalue", "corner singular value tail study");
    mc_cmd->add_option("--r", mc_args.r, "corner size");
    mc_cmd->add_option("--n", mc_args.n, "matrix dimension");
    mc_cmd->add_option("--trials", mc_args.trials, "sample count");
    mc_cmd->add_option("--delta", mc_args.deltas, "comma list of delta thresholds");
    mc_cmd->add_option("--seed", mc_args.seed, "rng seed");
    mc_cmd->add_flag("--no-bound", mc_args.no_bound,
                     "sample only; skip the tail bound comparison");
    mc_cmd->add_option("--jobs", mc_args.jobs, "worker threads");
    mc_cmd->add_option("--out", mc_args.out, "output directory");

    BoundsArgs bounds_args;
    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "tabulate probabilistic and deterministic bounds");
    bounds_cmd->add_option("--n", bounds_args.n, "matrix dimension");
    bounds_cmd->add_option("--r", bounds_args.r, "split index (default n/2)");
    bounds_cmd->add_option("--delta", bounds_args.delta, "failure probability parameter");
    CLI::Option* gap_opt =
        bounds_cmd->add_option("--gap", bounds_args.gap, "spectral gap for the envelopes");
    bounds_cmd->add_option("--dist", bounds_args.dist, "spectrum profile for the envelopes");
    bounds_cmd->add_option("--top", bounds_args.top, "logspace largest singular value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    bounds_args.gap_given = gap_opt->count() > 0;

    if (factor_cmd->parsed()) return run_factor(factor_args);
    if (grurv_cmd->parsed()) return run_grurv(grurv_args);
    if (exp_cmd->parsed()) {
        const ExperimentConfig cfg = resolve_experiment_config(exp_cmd, exp_flags, nullptr);
        const std::vector<randurv::GridPointResult> results = randurv::run_experiment(cfg);
        randurv::emit_report(results, cfg, std::cout);
        return any_grid_failure(results);
    }
    if (gexp_cmd->parsed()) {
        randurv::ChainSpec chain;
        const ExperimentConfig cfg = resolve_experiment_config(gexp_cmd, gexp_flags, &chain);
        const std::vector<randurv::GridPointResult> results =
            randurv::run_grurv_experiment(cfg, chain);
        randurv::emit_report(results, cfg, std::cout);
        return any_grid_failure(results);
    }
    if (mc_cmd->parsed()) return run_mc(mc_args);
    if (bounds_cmd->parsed()) return run_bounds(bounds_args);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const randurv::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 4;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 4;
    } catch (const randurv::SingularError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const randurv::ConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
