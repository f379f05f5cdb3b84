#include "kgsplit/evolve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace kgsplit {
namespace {

constexpr double kBlowupLimit = 1e10;

double max_abs(const State& st) {
    double m = 0;
    for (double v : st.q) m = std::max(m, std::abs(v));
    for (double v : st.p) m = std::max(m, std::abs(v));
    return m;
}

bool state_ok(const State& st, double& worst) {
    worst = max_abs(st);
    return std::isfinite(worst) && worst <= kBlowupLimit;
}

}  // namespace

SamplingPlan SamplingPlan::log_spaced(double tau, double t_end, int samples,
                                      double t1) {
    if (!(tau > 0) || !(t_end > 0) || samples < 2)
        throw std::invalid_argument("SamplingPlan: need tau>0, t_end>0, samples>=2");
    SamplingPlan plan;
    plan.tau = tau;
    auto snap = [tau](double t) {
        return static_cast<std::uint64_t>(std::llround(t / tau));
    };
    std::vector<std::uint64_t> idx;
    idx.push_back(0);
    const double lo = std::log10(t1), hi = std::log10(t_end);
    for (int k = 0; k < samples; ++k) {
        const double t = std::pow(10.0, lo + (hi - lo) * k / (samples - 1));
        idx.push_back(snap(t));
    }
    idx.push_back(snap(t_end));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    plan.step_indices = std::move(idx);
    return plan;
}

SamplingPlan SamplingPlan::endpoints(double tau, double t_end) {
    SamplingPlan plan;
    plan.tau = tau;
    plan.step_indices = {0,
                         static_cast<std::uint64_t>(std::llround(t_end / tau))};
    if (plan.step_indices[1] == 0) plan.step_indices = {0};
    return plan;
}

BlowupError::BlowupError(double t, double m)
    : std::runtime_error([t, m] {
          char buf[96];
          std::snprintf(buf, sizeof buf,
                        "state blow-up at t=%.6g (max |component| = %.3g)", t, m);
          return std::string(buf);
      }()),
      time(t),
      max_abs(m) {}

void step(const Scheme& scheme, const Lattice& lat, State& st, double tau,
          WorkCounter& work) {
    const double tau3 = tau * tau * tau;
    for (const Stage& stage : scheme.stages) {
        switch (stage.kind) {
            case StageKind::DriftA:
                flow_a(st, stage.coeff * tau);
                break;
            case StageKind::KickB:
                flow_b(lat, st, stage.coeff * tau);
                ++work.grad_evals;
                break;
            case StageKind::CorrectorC:
                flow_corrector(lat, st, stage.coeff * tau3);
                ++work.corrector_evals;
                break;
        }
    }
    ++work.steps;
}

EvolveResult evolve(const Scheme& scheme, const Lattice& lat, State& st,
                    double tau, const SamplingPlan& plan,
                    const Observer& observe) {
    using clock = std::chrono::steady_clock;
    EvolveResult res;
    std::uint64_t done = 0;
    for (std::uint64_t target : plan.step_indices) {
        const auto t0 = clock::now();
        for (; done < target; ++done) step(scheme, lat, st, tau, res.work);
        res.integration_seconds +=
            std::chrono::duration<double>(clock::now() - t0).count();
        double worst;
        if (!state_ok(st, worst))
            throw BlowupError(static_cast<double>(done) * tau, worst);
        if (observe) {
            const auto o0 = clock::now();
            observe(static_cast<double>(done) * tau, st, res.work,
                    res.integration_seconds);
            res.observer_seconds +=
                std::chrono::duration<double>(clock::now() - o0).count();
        }
    }
    return res;
}

}  // namespace kgsplit
