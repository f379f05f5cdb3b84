#include "kgsplit/lattice.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace kgsplit {
namespace {

void require_match(const Lattice& lat, const State& st) {
    if (lat.size() != st.q.size() || st.q.size() != st.p.size())
        throw std::invalid_argument("lattice/state dimension mismatch");
}

// SplitMix64 (Steele, Lea & Flood 2014); stable across platforms.
std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t& s) {
    return static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
}

}  // namespace

Lattice make_lattice(std::size_t n, double w, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("make_lattice: n must be >= 1");
    if (!(w > 0)) throw std::invalid_argument("make_lattice: w must be > 0");
    Lattice lat;
    lat.w = w;
    lat.seed = seed;
    lat.eps.resize(n);
    std::uint64_t s = seed;
    for (double& e : lat.eps) e = 0.5 + uniform01(s);
    return lat;
}

std::size_t central_site_index(std::size_t n) { return (n - 1) / 2; }

State single_site_excitation(const Lattice& lat, double energy) {
    if (!(energy > 0))
        throw std::invalid_argument("single_site_excitation: energy <= 0");
    State st = State::zero(lat.size());
    st.p[central_site_index(lat.size())] = std::sqrt(2.0 * energy);
    return st;
}

double kinetic_energy(const State& st) {
    double e = 0;
    for (double p : st.p) e += 0.5 * p * p;
    return e;
}

double potential_energy(const Lattice& lat, const State& st) {
    require_match(lat, st);
    const std::size_t n = lat.size();
    double e = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double q = st.q[i];
        e += 0.5 * lat.eps[i] * q * q + 0.25 * q * q * q * q;
    }
    double bonds = st.q[0] * st.q[0];  // (q_1 - q_0)^2 with q_0 = 0
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = st.q[i + 1] - st.q[i];
        bonds += d * d;
    }
    bonds += st.q[n - 1] * st.q[n - 1];  // (q_{N+1} - q_N)^2 with q_{N+1} = 0
    return e + bonds / (2.0 * lat.w);
}

double total_energy(const Lattice& lat, const State& st) {
    return kinetic_energy(st) + potential_energy(lat, st);
}

void grad_b(const Lattice& lat, std::span<const double> q,
            std::span<double> out) {
    const std::size_t n = lat.size();
    if (q.size() != n || out.size() != n)
        throw std::invalid_argument("grad_b: dimension mismatch");
    const double invw = 1.0 / lat.w;
    for (std::size_t i = 0; i < n; ++i) {
        const double qi = q[i];
        const double left = (i > 0) ? q[i - 1] : 0.0;
        const double right = (i + 1 < n) ? q[i + 1] : 0.0;
        out[i] = lat.eps[i] * qi + qi * qi * qi +
                 invw * (2.0 * qi - left - right);
    }
}

void flow_a(State& st, double s) {
    const std::size_t n = st.size();
    for (std::size_t i = 0; i < n; ++i) st.q[i] += s * st.p[i];
}

void flow_b(const Lattice& lat, State& st, double s) {
    require_match(lat, st);
    const std::size_t n = lat.size();
    const double invw = 1.0 / lat.w;
    const double* q = st.q.data();
    double* p = st.p.data();
    for (std::size_t i = 0; i < n; ++i) {
        const double qi = q[i];
        const double left = (i > 0) ? q[i - 1] : 0.0;
        const double right = (i + 1 < n) ? q[i + 1] : 0.0;
        p[i] -= s * (lat.eps[i] * qi + qi * qi * qi +
                     invw * (2.0 * qi - left - right));
    }
}

void flow_corrector(const Lattice& lat, State& st, double s) {
    require_match(lat, st);
    const std::size_t n = lat.size();
    const double invw = 1.0 / lat.w;
    std::vector<double> g(n);
    grad_b(lat, st.q, g);
    // grad G = 2 HessB g, HessB tridiagonal with diagonal
    // eps_i + 3 q_i^2 + 2/W and off-diagonal -1/W.
    for (std::size_t i = 0; i < n; ++i) {
        const double diag = lat.eps[i] + 3.0 * st.q[i] * st.q[i] + 2.0 * invw;
        const double left = (i > 0) ? g[i - 1] : 0.0;
        const double right = (i + 1 < n) ? g[i + 1] : 0.0;
        st.p[i] -= s * 2.0 * (diag * g[i] - invw * (left + right));
    }
}

void site_energies(const Lattice& lat, const State& st,
                   std::span<double> out) {
    require_match(lat, st);
    const std::size_t n = lat.size();
    if (out.size() != n)
        throw std::invalid_argument("site_energies: output size mismatch");
    const double quarter_invw = 1.0 / (4.0 * lat.w);
    for (std::size_t i = 0; i < n; ++i) {
        const double q = st.q[i];
        out[i] = 0.5 * st.p[i] * st.p[i] + 0.5 * lat.eps[i] * q * q +
                 0.25 * q * q * q * q;
        const double dl = (i > 0) ? q - st.q[i - 1] : q;
        const double dr = (i + 1 < n) ? st.q[i + 1] - q : -q;
        // boundary bonds carry full weight, interior bonds half each
        out[i] += ((i > 0) ? quarter_invw : 2 * quarter_invw) * dl * dl;
        out[i] += ((i + 1 < n) ? quarter_invw : 2 * quarter_invw) * dr * dr;
    }
}

void save_lattice(const Lattice& lat, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("save_lattice: cannot open " + path);
    f << "# kg-lattice n=" << lat.size() << " w=";
    char buf[32];
    auto* e = std::to_chars(buf, buf + sizeof buf, lat.w).ptr;
    f.write(buf, e - buf);
    f << " seed=" << lat.seed << '\n';
    for (double v : lat.eps) {
        e = std::to_chars(buf, buf + sizeof buf, v).ptr;
        f.write(buf, e - buf);
        f << '\n';
    }
}

Lattice load_lattice(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("load_lattice: cannot open " + path);
    std::string header;
    std::getline(f, header);
    Lattice lat;
    std::size_t n = 0;
    if (std::sscanf(header.c_str(), "# kg-lattice n=%zu w=%lf seed=%llu", &n,
                    &lat.w, reinterpret_cast<unsigned long long*>(&lat.seed)) != 3)
        throw std::runtime_error("load_lattice: bad header in " + path);
    lat.eps.reserve(n);
    double v;
    while (f >> v) lat.eps.push_back(v);
    if (lat.eps.size() != n)
        throw std::runtime_error("load_lattice: entry count mismatch in " + path);
    return lat;
}

}  // namespace kgsplit
