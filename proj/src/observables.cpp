#include "kgsplit/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kgsplit {

Diagnostics diagnostics(const Lattice& lat, const State& st, double e0,
                        double t) {
    if (!(e0 > 0)) throw std::invalid_argument("diagnostics: e0 must be > 0");
    const std::size_t n = lat.size();
    std::vector<double> h(n);
    site_energies(lat, st, h);

    double et = 0;
    for (double v : h) et += v;
    if (et <= 0)
        throw std::domain_error("diagnostics: degenerate energy distribution");

    double ibar = 0;
    for (std::size_t i = 0; i < n; ++i)
        ibar += static_cast<double>(i + 1) * h[i];
    ibar /= et;

    double m2 = 0, invp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = h[i] / et;
        const double d = static_cast<double>(i + 1) - ibar;
        m2 += d * d * f;
        invp += f * f;
    }

    Diagnostics d;
    d.t = t;
    d.ree = std::abs(et - e0) / e0;
    d.m2 = m2;
    d.p = 1.0 / invp;
    d.ibar = ibar;
    return d;
}

}  // namespace kgsplit
