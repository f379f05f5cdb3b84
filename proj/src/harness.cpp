#include "kgsplit/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kgsplit/io.hpp"

namespace kgsplit {
namespace {

double fit_slope(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// One lap of the scaled step sequence for H = A + eps*B: kick times carry
// eps, corrector times eps^2 (exact flows of eps*B and eps^2*G).
void step_scaled(const Scheme& scheme, const Lattice& lat, State& st,
                 double tau, double eps) {
    const double tau3 = tau * tau * tau;
    for (const Stage& stage : scheme.stages) {
        switch (stage.kind) {
            case StageKind::DriftA:
                flow_a(st, stage.coeff * tau);
                break;
            case StageKind::KickB:
                flow_b(lat, st, stage.coeff * tau * eps);
                break;
            case StageKind::CorrectorC:
                flow_corrector(lat, st, stage.coeff * tau3 * eps * eps);
                break;
        }
    }
}

double scaled_energy(const Lattice& lat, const State& st, double eps) {
    return kinetic_energy(st) + eps * potential_energy(lat, st);
}

// Probe state for the eps-scaling runs: low q amplitude with momentum-heavy
// weighting keeps the trajectory nearly independent of eps over the short
// horizon (force scale eps) while the p-weighted bracket functions stay
// visible, so the energy-error ratio reflects the eps grading alone.
State scaling_probe_state(std::size_t n) {
    State st = order_probe_state(n);
    for (auto& v : st.q) v *= 0.1;  // amplitude 0.05
    for (auto& v : st.p) v *= 4.0;  // amplitude 2.0
    return st;
}

double max_ree_scaled(const Scheme& scheme, const Lattice& lat, double tau,
                      double eps, double horizon) {
    State st = scaling_probe_state(lat.size());
    const double e0 = scaled_energy(lat, st, eps);
    const auto steps = static_cast<std::uint64_t>(std::llround(horizon / tau));
    double worst = 0;
    for (std::uint64_t k = 0; k < steps; ++k) {
        step_scaled(scheme, lat, st, tau, eps);
        worst = std::max(worst, std::abs(scaled_energy(lat, st, eps) - e0) /
                                    std::abs(e0));
    }
    if (!std::isfinite(worst))
        throw std::runtime_error("epsilon_scaling_probe: unstable step size");
    return worst;
}

double max_ree_run(const Scheme& scheme, const Lattice& lat, const State& st0,
                   double tau, double horizon, int samples) {
    State st = st0;
    const double e0 = total_energy(lat, st);
    SamplingPlan plan = SamplingPlan::log_spaced(tau, horizon, samples, tau);
    double worst = 0;
    try {
        evolve(scheme, lat, st, tau, plan,
               [&](double, const State& s, const WorkCounter&, double) {
                   worst = std::max(worst, std::abs(total_energy(lat, s) - e0) /
                                               std::abs(e0));
               });
    } catch (const BlowupError&) {
        return std::numeric_limits<double>::infinity();
    }
    if (!std::isfinite(worst)) return std::numeric_limits<double>::infinity();
    return worst;
}

int bench_thread_cap() {
    if (const char* env = std::getenv("KGSPLIT_BENCH_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

void RunConfig::check() const {
    if (!(tau > 0)) throw std::invalid_argument("config: tau must be > 0");
    if (!(t_end > 0)) throw std::invalid_argument("config: t-end must be > 0");
    if (samples < 2) throw std::invalid_argument("config: samples must be >= 2");
    if (!(energy > 0)) throw std::invalid_argument("config: energy must be > 0");
    if (sites == 0) throw std::invalid_argument("config: sites must be >= 1");
    if (!(w > 0)) throw std::invalid_argument("config: w must be > 0");
}

RunResult run_experiment(const RunConfig& cfg) {
    cfg.check();
    const Scheme scheme = catalog_scheme(cfg.scheme);
    const Lattice lat = make_lattice(cfg.sites, cfg.w, cfg.seed);
    State st = single_site_excitation(lat, cfg.energy);
    const double e0 = total_energy(lat, st);

    RunResult res;
    res.summary.scheme = scheme.name;
    res.summary.tau = cfg.tau;

    SamplingPlan plan = SamplingPlan::log_spaced(cfg.tau, cfg.t_end,
                                                 cfg.samples);
    WorkCounter final_work;
    double final_seconds = 0;
    auto observer = [&](double t, const State& s, const WorkCounter& work,
                        double seconds) {
        Diagnostics d = diagnostics(lat, s, e0, t);
        res.records.push_back({t, d.ree, d.m2, d.p, work.grad_evals,
                               work.corrector_evals, seconds});
        res.summary.max_ree = std::max(res.summary.max_ree, d.ree);
        final_work = work;
        final_seconds = seconds;
    };
    try {
        evolve(scheme, lat, st, cfg.tau, plan, observer);
    } catch (const BlowupError& e) {
        res.summary.aborted = true;
        res.summary.abort_reason = e.what();
    }
    if (!res.records.empty()) {
        res.summary.final_m2 = res.records.back().m2;
        res.summary.final_p = res.records.back().p;
    }
    res.summary.wall_seconds = final_seconds;
    const double t_reached = res.summary.aborted && !res.records.empty()
                                 ? std::max(res.records.back().t, cfg.tau)
                                 : static_cast<double>(plan.step_indices.back()) *
                                       cfg.tau;
    if (t_reached > 0) {
        res.summary.grad_evals_per_unit_time =
            static_cast<double>(final_work.grad_evals) / t_reached;
        res.summary.b_evals_per_unit_time =
            static_cast<double>(final_work.grad_evals +
                                2 * final_work.corrector_evals) /
            t_reached;
    }
    if (!cfg.out.empty()) write_csv(cfg.out, res.records, res.summary);
    return res;
}

double calibrate_tau(const Scheme& scheme, const Lattice& lat,
                     double target_ree, double horizon, double energy) {
    if (!(target_ree > 0))
        throw std::invalid_argument("calibrate_tau: target must be > 0");
    const State st0 = single_site_excitation(lat, energy);
    auto probe = [&](double tau) {
        return max_ree_run(scheme, lat, st0, tau, horizon, 33);
    };
    double lo = 1e-3, hi = 1.0;
    if (probe(lo) > target_ree)
        throw std::runtime_error(
            "calibrate_tau: target unattainable at tau = 1e-3");
    if (probe(hi) <= target_ree) return hi;
    while (hi / lo > 1.02) {
        const double mid = std::sqrt(lo * hi);
        (probe(mid) <= target_ree ? lo : hi) = mid;
    }
    return lo;
}

State order_probe_state(std::size_t n) {
    State st = State::zero(n);
    const double twopi = 2.0 * std::acos(-1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i + 1) / static_cast<double>(n + 1);
        st.q[i] = 0.5 * std::sin(twopi * x);
        st.p[i] = 0.5 * std::cos(2.0 * twopi * x);
    }
    return st;
}

std::vector<double> default_order_taus() {
    // six geometric points spanning one decade
    std::vector<double> taus;
    const double hi = 0.3, lo = 0.03;
    for (int k = 0; k < 6; ++k)
        taus.push_back(hi * std::pow(lo / hi, k / 5.0));
    return taus;
}

double measure_order(const Scheme& scheme, const Lattice& lat,
                     std::span<const double> taus, double horizon) {
    if (taus.size() < 4 || taus.front() < 9.99 * taus.back())
        throw std::invalid_argument(
            "measure_order: need >= 4 tau values spanning a decade");
    const State st0 = order_probe_state(lat.size());
    std::vector<double> lx, ly;
    for (double tau : taus) {
        const double ree = max_ree_run(scheme, lat, st0, tau, horizon, 25);
        if (ree < 1e-13)
            throw std::runtime_error(
                "measure_order: REe at roundoff floor; shrink the tau range");
        lx.push_back(std::log(tau));
        ly.push_back(std::log(ree));
    }
    return fit_slope(lx, ly);
}

double epsilon_scaling_probe(const Scheme& scheme, double eps_scale,
                             double tau, double horizon, std::size_t sites,
                             std::uint64_t seed) {
    if (!(eps_scale > 0) || eps_scale > 1)
        throw std::invalid_argument(
            "epsilon_scaling_probe: eps must be in (0, 1]");
    const Lattice lat = make_lattice(sites, 4.0, seed);
    const double r1 = max_ree_scaled(scheme, lat, tau, eps_scale, horizon);
    const double r2 = max_ree_scaled(scheme, lat, tau, eps_scale / 2, horizon);
    if (r1 < 1e-13 || r2 < 1e-13)
        throw std::runtime_error(
            "epsilon_scaling_probe: REe at roundoff floor; increase tau");
    return r1 / r2;
}

std::string BenchTable::format() const {
    std::ostringstream os;
    os << "scheme     tau        max_ree    final_m2   final_p  wall_s     "
          "grad/t     beval/t  exclusive=" << (exclusive_timing ? "yes" : "no")
       << "\n";
    for (const BenchRow& r : rows) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "%-10s %-10.6g %-10.3g %-10.4g %-8.4g %-10.4g %-10.6g "
                      "%-10.6g%s\n",
                      r.scheme.c_str(), r.tau, r.max_ree, r.final_m2,
                      r.final_p, r.wall_seconds, r.grad_evals_per_unit_time,
                      r.b_evals_per_unit_time,
                      r.aborted ? "  ABORTED" : "");
        os << buf;
    }
    return os.str();
}

BenchTable bench_suite(const std::vector<RunConfig>& cfgs) {
    if (cfgs.empty()) throw std::invalid_argument("bench_suite: no configs");
    for (const RunConfig& c : cfgs) {
        c.check();
        if (c.sites != cfgs[0].sites || c.w != cfgs[0].w ||
            c.seed != cfgs[0].seed || c.energy != cfgs[0].energy ||
            c.t_end != cfgs[0].t_end)
            throw std::invalid_argument(
                "bench_suite: configs must share sites/w/seed/energy/t-end");
    }
    const int threads =
        std::min<int>(bench_thread_cap(), static_cast<int>(cfgs.size()));
    BenchTable table;
    table.exclusive_timing = threads == 1;
    table.rows.resize(cfgs.size());

    std::size_t next = 0;
    std::vector<std::thread> pool;
    std::mutex mu;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t k;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= cfgs.size()) return;
                    k = next++;
                }
                table.rows[k] = run_experiment(cfgs[k]).summary;
            }
        });
    for (auto& th : pool) th.join();

    std::sort(table.rows.begin(), table.rows.end(),
              [](const BenchRow& a, const BenchRow& b) {
                  return a.wall_seconds < b.wall_seconds;
              });
    return table;
}

}  // namespace kgsplit
