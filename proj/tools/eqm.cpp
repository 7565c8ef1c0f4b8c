#include "eqm/edge_solver.hpp"
#include "eqm/gas.hpp"
#include "eqm/measure.hpp"
#include "eqm/ortho.hpp"
#include "eqm/polynomial.hpp"
#include "eqm/reference_families.hpp"
#include "eqm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;
constexpr int kExitVerify = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    std::string potential_kind = "polynomial";
    eqm::Polynomial coeffs;
    double alpha = 0.0;
    eqm::Barriers barriers;
    int grid = 200;
    std::uint64_t seed = 0;
    json raw;
};

double parse_barrier(const json& v, bool is_tau) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        throw ConfigError("barrier string must be \"inf\" or \"-inf\"");
    }
    if (v.is_number()) return v.get<double>();
    if (v.is_null())
        return is_tau ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
    throw ConfigError("barrier must be a number or \"inf\"/\"-inf\"");
}

JobConfig load_config(const std::string& path, std::optional<int> grid_override,
                      std::optional<std::uint64_t> seed_override) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }

    JobConfig cfg;
    cfg.raw = j;
    try {
        const json& pot = j.at("potential");
        cfg.potential_kind = pot.at("kind").get<std::string>();
        if (cfg.potential_kind != "polynomial" && cfg.potential_kind != "poly_log")
            throw ConfigError("potential.kind must be \"polynomial\" or \"poly_log\"");
        cfg.coeffs = eqm::Polynomial(pot.at("coeffs").get<std::vector<double>>());
        if (cfg.potential_kind == "poly_log") cfg.alpha = pot.at("alpha").get<double>();

        const double sigma = parse_barrier(j.value("sigma", json{}), false);
        const double tau = parse_barrier(j.value("tau", json{}), true);
        if (!(sigma < tau)) throw ConfigError("sigma < tau required");
        cfg.barriers = eqm::Barriers(sigma, tau);

        cfg.grid = j.value("grid", 200);
        cfg.seed = j.value("seed", std::uint64_t{0});
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config error: ") + e.what());
    }
    if (grid_override) cfg.grid = *grid_override;
    if (seed_override) cfg.seed = *seed_override;
    if (cfg.grid < 2) throw ConfigError("grid must be >= 2");
    return cfg;
}

void require_polynomial(const JobConfig& cfg) {
    if (cfg.potential_kind != "polynomial")
        throw ConfigError("this command supports only polynomial potentials");
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ConfigError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool is_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

json report_to_json(const eqm::DiagnosticsReport& r) {
    return json{{"mass_error", r.mass_error},
                {"min_density", r.min_density},
                {"euler_lagrange_equality_error", r.euler_lagrange_equality_error},
                {"euler_lagrange_inequality_margin", r.euler_lagrange_inequality_margin},
                {"stieltjes_decay_error", r.stieltjes_decay_error},
                {"robin_spread", r.robin_spread},
                {"passed", r.passed}};
}

int cmd_edges(const JobConfig& cfg, Output& out) {
    require_polynomial(cfg);
    const auto [a0, b0] = eqm::solve_free_edges(cfg.coeffs);
    const eqm::EdgeClassification cls = eqm::classify(cfg.coeffs, cfg.barriers);
    json j{{"case", eqm::to_string(cls.kind)},
           {"a", cls.a},
           {"b", cls.b},
           {"a0", a0},
           {"b0", b0}};
    out.stream() << j.dump() << "\n";
    return kExitOk;
}

int cmd_density(const JobConfig& cfg, Output& out) {
    require_polynomial(cfg);
    const eqm::EquilibriumMeasure m = eqm::build_measure(cfg.coeffs, cfg.barriers);
    auto& os = out.stream();
    os << "x,density\n";
    // Midpoint grid: hard-edge endpoints are never sampled.
    for (int i = 0; i < cfg.grid; ++i) {
        const double x = m.a() + (m.b() - m.a()) * (i + 0.5) / cfg.grid;
        os << fmt(x) << "," << fmt(eqm::density_at(m, x)) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const JobConfig& cfg, Output& out) {
    require_polynomial(cfg);
    const eqm::EquilibriumMeasure m = eqm::build_measure(cfg.coeffs, cfg.barriers);
    eqm::Tolerances tol = eqm::default_tolerances();
    if (cfg.raw.contains("tolerances")) {
        try {
            for (const auto& [key, val] : cfg.raw.at("tolerances").items()) {
                if (!tol.count(key)) throw ConfigError("unknown tolerance: " + key);
                tol[key] = val.get<double>();
            }
        } catch (const json::exception& e) {
            throw ConfigError(std::string("tolerances config error: ") + e.what());
        }
    }
    const eqm::DiagnosticsReport r = eqm::run_diagnostics(m, tol);
    out.stream() << report_to_json(r).dump() << "\n";
    return r.passed ? kExitOk : kExitVerify;
}

int cmd_sample(const JobConfig& cfg, Output& out) {
    require_polynomial(cfg);
    const eqm::EquilibriumMeasure m = eqm::build_measure(cfg.coeffs, cfg.barriers);

    eqm::GasConfig gc;
    gc.barriers = cfg.barriers;
    gc.seed = cfg.seed;
    const json g = cfg.raw.value("gas", json::object());
    try {
        gc.n = g.value("n", 8);
        gc.beta = g.value("beta", 2.0);
        gc.sweeps = g.value("sweeps", long{20000});
        gc.burn_in = g.value("burn_in", long{2000});
        gc.step_scale = g.value("step_scale", 0.5);
        gc.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("gas config error: ") + e.what());
    }

    const eqm::ChainResult chain = eqm::run_chain(cfg.coeffs, gc);
    const double ks = eqm::empirical_distance(chain.samples, m);

    // Histogram over 64 uniform bins spanning support union sample range.
    double lo = m.a(), hi = m.b();
    for (const auto& s : chain.samples)
        for (double x : s) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    constexpr int kBins = 64;
    std::vector<long> counts(kBins, 0);
    for (const auto& s : chain.samples)
        for (double x : s) {
            int b = static_cast<int>((x - lo) / (hi - lo) * kBins);
            b = std::clamp(b, 0, kBins - 1);
            ++counts[static_cast<size_t>(b)];
        }
    auto& os = out.stream();
    os << "bin_low,bin_high,count\n";
    for (int i = 0; i < kBins; ++i)
        os << fmt(lo + (hi - lo) * i / kBins) << "," << fmt(lo + (hi - lo) * (i + 1) / kBins)
           << "," << counts[static_cast<size_t>(i)] << "\n";

    const json j{{"ks_distance", ks}, {"acceptance_rate", chain.acceptance_rate}};
    if (out.is_file())
        std::cout << j.dump() << "\n";
    else
        out.stream() << j.dump() << "\n";
    return kExitOk;
}

int cmd_ortho(const JobConfig& cfg, Output& out) {
    const json o = cfg.raw.value("ortho", json::object());
    int n;
    double mu, alpha;
    try {
        n = o.value("n", 7);
        alpha = (cfg.potential_kind == "poly_log") ? cfg.alpha : 0.0;
        mu = o.value("mu", alpha * n);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("ortho config error: ") + e.what());
    }
    if (n < 1 || n > 16) throw ConfigError("ortho.n must be in [1,16]");

    const eqm::OrthoBasis basis = eqm::build_basis(mu, n);
    double b_lim;
    if (alpha > 0.0)
        b_lim = eqm::solve_logpot_soft_edges(alpha).second;
    else
        b_lim = eqm::gauss_b_of_sigma(0.0);

    auto f_limit = [&](double x) {
        if (x <= 0.0) return 0.0;
        return alpha > 0.0 ? eqm::logpot_soft_density(alpha, x)
                           : eqm::logpot_hard_density(0.0, 0.0, x);
    };

    auto& os = out.stream();
    os << "x,f_n,f_limit\n";
    const double hi = 1.1 * b_lim;
    for (int i = 0; i < cfg.grid; ++i) {
        const double x = hi * (i + 0.5) / cfg.grid;
        os << fmt(x) << "," << fmt(eqm::fn_density(basis, x)) << "," << fmt(f_limit(x)) << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const JobConfig& cfg, Output& out) {
    require_polynomial(cfg);
    const json s = cfg.raw.value("sweep", json::object());
    std::string param;
    double from, to;
    int count;
    try {
        param = s.at("param").get<std::string>();
        from = s.at("from").get<double>();
        to = s.at("to").get<double>();
        count = s.value("count", 20);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("sweep config error: ") + e.what());
    }
    if (param != "sigma" && param != "tau") throw ConfigError("sweep.param must be sigma or tau");
    if (count < 1) throw ConfigError("sweep.count must be >= 1");

    auto& os = out.stream();
    os << param << ",case,a,b\n";
    for (int i = 0; i < count; ++i) {
        const double v = count == 1 ? from : from + (to - from) * i / (count - 1);
        eqm::Barriers bar = cfg.barriers;
        (param == "sigma" ? bar.sigma : bar.tau) = v;
        if (!(bar.sigma < bar.tau)) throw ConfigError("sweep produced sigma >= tau");
        const eqm::EdgeClassification cls = eqm::classify(cfg.coeffs, bar);
        os << fmt(v) << "," << eqm::to_string(cls.kind) << "," << fmt(cls.a) << ","
           << fmt(cls.b) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilibrium measures of barrier-confined invariant ensembles"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::optional<int> grid;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "job configuration (JSON)")->required();
    app.add_option("--grid", grid, "override grid size");
    app.add_option("--seed", seed, "override RNG seed");
    app.add_option("--out", out_path, "output path (default: stdout)");

    const std::string names[] = {"edges", "density", "verify", "sample", "ortho", "sweep"};
    for (const auto& name : names) app.add_subcommand(name)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        const JobConfig cfg = load_config(config_path, grid, seed);
        Output out(out_path);
        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "edges") return cmd_edges(cfg, out);
        if (sub == "density") return cmd_density(cfg, out);
        if (sub == "verify") return cmd_verify(cfg, out);
        if (sub == "sample") return cmd_sample(cfg, out);
        if (sub == "ortho") return cmd_ortho(cfg, out);
        if (sub == "sweep") return cmd_sweep(cfg, out);
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::runtime_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    }
}
