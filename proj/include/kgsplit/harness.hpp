#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kgsplit/evolve.hpp"
#include "kgsplit/lattice.hpp"
#include "kgsplit/observables.hpp"
#include "kgsplit/scheme.hpp"

namespace kgsplit {

struct RunConfig {
    std::string scheme;
    double tau = 0;
    std::size_t sites = 1000;
    double w = 4;
    std::uint64_t seed = 1;
    double energy = 0.4;
    double t_end = 1e5;
    int samples = 60;
    std::string out;  // CSV path; empty = no file output

    void check() const;  // throws std::invalid_argument on bad values
};

struct ObservationRecord {
    double t = 0;
    double ree = 0;
    double m2 = 0;
    double p = 0;
    std::uint64_t grad_evals = 0;
    std::uint64_t corrector_evals = 0;
    double wall_seconds = 0;  // cumulative integration time
};

struct BenchRow {
    std::string scheme;
    double tau = 0;
    double max_ree = 0;
    double final_m2 = 0;
    double final_p = 0;
    double wall_seconds = 0;
    double grad_evals_per_unit_time = 0;  // = kicks per step / tau
    double b_evals_per_unit_time = 0;     // (grad + 2*corrector) / t_end
    bool aborted = false;
    std::string abort_reason;
};

struct RunResult {
    std::vector<ObservationRecord> records;
    BenchRow summary;
};

// Full protocol run: disorder realization (sites, w, seed), single-site
// excitation with the given packet energy, evolution to t_end with
// log-spaced sampling.  A blow-up yields the partial records plus an
// aborted summary instead of a throw.
RunResult run_experiment(const RunConfig& cfg);

// Largest tau in [1e-3, 1] (2% geometric resolution) whose max REe over the
// calibration horizon stays at or below target_ree, by bisection with
// bracketing probes.  Throws std::runtime_error if even tau = 1e-3 misses
// the target.
double calibrate_tau(const Scheme& scheme, const Lattice& lat,
                     double target_ree = 1e-5, double horizon = 1e3,
                     double energy = 0.4);

// Smooth deterministic low-energy state used by the convergence and
// eps-scaling probes.
State order_probe_state(std::size_t n);

// Least-squares slope of log max-REe versus log tau over a fixed horizon
// from the order probe state.  Throws std::runtime_error if the smallest
// REe sits at the roundoff floor (< 1e-13).
double measure_order(const Scheme& scheme, const Lattice& lat,
                     std::span<const double> taus, double horizon = 10.0);
std::vector<double> default_order_taus();

// Ratio max-REe(eps) / max-REe(eps/2) at fixed tau for the Hamiltonian
// A + eps*B (kick times scaled by eps, corrector times by eps^2).
// Approaches 4 when the eps^2 error terms dominate and 2 for eps-linear
// schemes.  Throws std::runtime_error at the roundoff floor.
double epsilon_scaling_probe(const Scheme& scheme, double eps_scale,
                             double tau, double horizon = 0.3,
                             std::size_t sites = 32, std::uint64_t seed = 99);

struct BenchTable {
    std::vector<BenchRow> rows;  // sorted by wall seconds
    bool exclusive_timing = false;
    std::string format() const;
};

// Runs every config (all must share sites/w/seed/energy/t_end); parallel up
// to KGSPLIT_BENCH_THREADS (default: hardware concurrency, at most one run
// per core).  exclusive_timing records whether runs were timed one at a
// time.
BenchTable bench_suite(const std::vector<RunConfig>& cfgs);

}  // namespace kgsplit
