#pragma once

#include "kgsplit/lattice.hpp"

namespace kgsplit {

// Wave-packet diagnostics from the normalized site-energy distribution
// h_i / E_t (1-based site labels).
struct Diagnostics {
    double t = 0;
    double ree = 0;   // |E_t - E_0| / E_0
    double m2 = 0;    // sum_i (i - ibar)^2 h_i / E_t
    double p = 0;     // 1 / sum_i (h_i / E_t)^2
    double ibar = 0;  // sum_i i h_i / E_t
};

Diagnostics diagnostics(const Lattice& lat, const State& st, double e0,
                        double t);

}  // namespace kgsplit
