#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kgsplit/lattice.hpp"
#include "kgsplit/scheme.hpp"

namespace kgsplit {

struct WorkCounter {
    std::uint64_t grad_evals = 0;
    std::uint64_t corrector_evals = 0;
    std::uint64_t steps = 0;
};

// Observation times as whole step counts (times snapped to multiples of
// tau); always starts at step 0 and ends at the snapped horizon.
struct SamplingPlan {
    double tau = 0;
    std::vector<std::uint64_t> step_indices;

    double time_at(std::size_t k) const {
        return static_cast<double>(step_indices[k]) * tau;
    }
    // t = 0, `samples` log-spaced times from t1 to t_end (snapped, deduped),
    // horizon always included.
    static SamplingPlan log_spaced(double tau, double t_end, int samples,
                                   double t1 = 1.0);
    // just {0, horizon}
    static SamplingPlan endpoints(double tau, double t_end);
};

class BlowupError : public std::runtime_error {
  public:
    BlowupError(double time, double max_abs);
    double time;
    double max_abs;
};

// Applies each stage in order: DriftA -> flow_a(coeff*tau),
// KickB -> flow_b(coeff*tau), CorrectorC -> flow_corrector(coeff*tau^3).
void step(const Scheme& scheme, const Lattice& lat, State& st, double tau,
          WorkCounter& work);

using Observer = std::function<void(double t, const State& st,
                                    const WorkCounter& work,
                                    double integration_seconds)>;

struct EvolveResult {
    WorkCounter work;
    double integration_seconds = 0;  // pure stepping time, observers excluded
    double observer_seconds = 0;     // time spent inside observer callbacks
};

// Advances through every plan entry, invoking the observer at each one.
// Throws BlowupError if the state leaves |q|,|p| <= 1e10 or turns non-finite
// (checked at observation points).
EvolveResult evolve(const Scheme& scheme, const Lattice& lat, State& st,
                    double tau, const SamplingPlan& plan,
                    const Observer& observe);

}  // namespace kgsplit
