// kgsplit command-line front end: wave-packet experiments on the disordered
// quartic Klein-Gordon chain driven by splitting symplectic integrators.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgsplit/harness.hpp"
#include "kgsplit/io.hpp"

namespace {

using namespace kgsplit;

void error_line(const std::string& kind, const std::string& msg) {
    std::cerr << "error kind=" << kind << " msg=\"" << msg << "\"\n";
}

struct Flags {
    std::string config_path;
    std::string scheme;
    double tau = 0;
    double sites = 0;
    double w = 0;
    double seed = 0;
    double energy = 0;
    double t_end = 0;
    double samples = 0;
    std::string out;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config_path, "flat key = value config file");
    cmd->add_option("--scheme", f.scheme, "integrator name (see `schemes`)");
    cmd->add_option("--tau", f.tau, "step size");
    cmd->add_option("--sites", f.sites, "lattice size N");
    cmd->add_option("--w", f.w, "disorder/coupling parameter W");
    cmd->add_option("--seed", f.seed, "disorder realization seed");
    cmd->add_option("--energy", f.energy, "initial packet energy");
    cmd->add_option("--t-end", f.t_end, "integration horizon");
    cmd->add_option("--samples", f.samples, "log-spaced observation count");
    cmd->add_option("--out", f.out, "output path");
}

RunConfig merge(const CLI::App* cmd, const Flags& f) {
    RunConfig cfg;
    cfg.scheme = "SABA2";
    cfg.tau = 0.0185;
    if (!f.config_path.empty()) cfg = load_config(f.config_path).base;
    if (cmd->count("--scheme")) cfg.scheme = f.scheme;
    if (cmd->count("--tau")) cfg.tau = f.tau;
    if (cmd->count("--sites")) cfg.sites = static_cast<std::size_t>(f.sites);
    if (cmd->count("--w")) cfg.w = f.w;
    if (cmd->count("--seed")) cfg.seed = static_cast<std::uint64_t>(f.seed);
    if (cmd->count("--energy")) cfg.energy = f.energy;
    if (cmd->count("--t-end")) cfg.t_end = f.t_end;
    if (cmd->count("--samples")) cfg.samples = static_cast<int>(f.samples);
    if (cmd->count("--out")) cfg.out = f.out;
    return cfg;
}

int cmd_run(const CLI::App* cmd, const Flags& f) {
    RunConfig cfg = merge(cmd, f);
    RunResult res = run_experiment(cfg);
    if (cfg.out.empty()) {
        std::cout << "# scheme=" << res.summary.scheme
                  << " tau=" << format_double(res.summary.tau)
                  << " max_ree=" << format_double(res.summary.max_ree)
                  << (res.summary.aborted ? " ABORTED" : "") << '\n'
                  << format_csv(res.records);
    } else {
        std::printf("%s tau=%g max_ree=%.3g final_m2=%.6g final_p=%.6g "
                    "wall=%.3gs -> %s\n",
                    res.summary.scheme.c_str(), res.summary.tau,
                    res.summary.max_ree, res.summary.final_m2,
                    res.summary.final_p, res.summary.wall_seconds,
                    cfg.out.c_str());
    }
    if (res.summary.aborted) {
        error_line("blowup", res.summary.abort_reason);
        return 2;
    }
    return 0;
}

int cmd_bench(const CLI::App* cmd, const Flags& f) {
    if (f.config_path.empty())
        throw CLI::ValidationError("bench requires --config with a runs= list");
    ConfigFile file = load_config(f.config_path);
    if (file.runs.empty())
        throw CLI::ValidationError("bench config must contain runs=scheme:tau,...");
    RunConfig base = merge(cmd, f);
    if (!f.out.empty()) std::filesystem::create_directories(f.out);
    std::vector<RunConfig> cfgs;
    for (const auto& [scheme, tau] : file.runs) {
        RunConfig c = base;
        c.scheme = scheme;
        c.tau = tau;
        c.out = f.out.empty() ? "" : f.out + "/" + scheme + ".csv";
        cfgs.push_back(std::move(c));
    }
    BenchTable table = bench_suite(cfgs);
    std::cout << table.format();
    for (const BenchRow& r : table.rows)
        if (r.aborted) {
            error_line("blowup", r.scheme + ": " + r.abort_reason);
            return 2;
        }
    return 0;
}

int cmd_calibrate(const CLI::App* cmd, const Flags& f, double target,
                  double horizon) {
    RunConfig cfg = merge(cmd, f);
    Scheme scheme = catalog_scheme(cfg.scheme);
    Lattice lat = make_lattice(cfg.sites, cfg.w, cfg.seed);
    double tau = calibrate_tau(scheme, lat, target, horizon, cfg.energy);
    std::cout << cfg.scheme << " tau = " << format_double(tau) << '\n';
    return 0;
}

int cmd_order_check(const CLI::App* cmd, const Flags& f) {
    RunConfig cfg = merge(cmd, f);
    if (!cmd->count("--sites")) cfg.sites = 32;
    Lattice lat = make_lattice(cfg.sites, cfg.w, cfg.seed);
    auto taus = default_order_taus();
    std::printf("%-9s %-8s %s\n", "scheme", "order", "fitted slope");
    for (const auto& name : catalog_names()) {
        Scheme s = catalog_scheme(name);
        double slope = measure_order(s, lat, taus);
        std::printf("%-9s %-8s %.3f\n", name.c_str(), s.order_label.c_str(),
                    slope);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"splitting symplectic integrators on the disordered "
                 "Klein-Gordon chain"};
    app.require_subcommand(1);

    Flags f;
    double target = 1e-5, horizon = 1e3;
    CLI::App* run = app.add_subcommand("run", "single experiment -> CSV");
    add_common(run, f);
    CLI::App* bench =
        app.add_subcommand("bench", "multi-scheme comparison table");
    add_common(bench, f);
    CLI::App* cal =
        app.add_subcommand("calibrate", "largest tau meeting an REe target");
    add_common(cal, f);
    cal->add_option("--target-ree", target, "max REe target (default 1e-5)");
    cal->add_option("--horizon", horizon, "calibration horizon (default 1e3)");
    CLI::App* order =
        app.add_subcommand("order-check", "fitted convergence slopes");
    add_common(order, f);
    app.add_subcommand("schemes", "dump the scheme coefficient catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        error_line("usage", e.what());
        return 1;
    }

    try {
        if (app.got_subcommand("schemes")) {
            std::cout << kgsplit::format_catalog_table();
            return 0;
        }
        if (app.got_subcommand(run)) return cmd_run(run, f);
        if (app.got_subcommand(bench)) return cmd_bench(bench, f);
        if (app.got_subcommand(cal)) return cmd_calibrate(cal, f, target, horizon);
        if (app.got_subcommand(order)) return cmd_order_check(order, f);
    } catch (const CLI::Error& e) {
        error_line("usage", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        error_line("usage", e.what());
        return 1;
    } catch (const std::exception& e) {
        error_line("runtime", e.what());
        return 2;
    }
    return 0;
}
