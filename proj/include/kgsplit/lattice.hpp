#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kgsplit {

// One disorder realization of the quartic Klein-Gordon chain
//   H = sum_i  p_i^2/2 + eps_i q_i^2/2 + q_i^4/4 + (q_{i+1}-q_i)^2/(2W)
// with fixed ends q_0 = q_{N+1} = 0; the bond sum runs over all N+1 bonds.
struct Lattice {
    std::vector<double> eps;  // per-site potential strengths in [1/2, 3/2]
    double w = 1.0;
    std::uint64_t seed = 0;

    std::size_t size() const { return eps.size(); }
};

struct State {
    std::vector<double> q;
    std::vector<double> p;

    std::size_t size() const { return q.size(); }
    static State zero(std::size_t n) { return {std::vector<double>(n, 0.0),
                                               std::vector<double>(n, 0.0)}; }
};

// Deterministic disorder draw: eps_i i.i.d. uniform on [1/2, 3/2] from a
// SplitMix64 stream, so realizations are bit-reproducible everywhere.
Lattice make_lattice(std::size_t n, double w, std::uint64_t seed);

// 1-based central site is ceil(N/2); returned as a 0-based index.
std::size_t central_site_index(std::size_t n);

// q = 0 everywhere, p = 0 except p_center = +sqrt(2 E).
State single_site_excitation(const Lattice& lat, double energy);

double kinetic_energy(const State& st);
double potential_energy(const Lattice& lat, const State& st);
double total_energy(const Lattice& lat, const State& st);

// g_i = dB/dq_i = eps_i q_i + q_i^3 + (2 q_i - q_{i+1} - q_{i-1})/W
void grad_b(const Lattice& lat, std::span<const double> q,
            std::span<double> out);

// Exact flow of A = sum p^2/2 for time s:  q += s p.
void flow_a(State& st, double s);

// Exact flow of B(q) for time s:  p -= s grad_b(q).
void flow_b(const Lattice& lat, State& st, double s);

// Exact flow of G(q) = {{A,B},B} = sum_j (dB/dq_j)^2 for time s:
// p -= s * 2 HessB(q) grad_b(q).
void flow_corrector(const Lattice& lat, State& st, double s);

// Site energy partition: kinetic/on-site terms per site plus half of each
// interior bond to both endpoints; boundary bonds go wholly to their single
// interior endpoint so the partition sums exactly to total_energy.
void site_energies(const Lattice& lat, const State& st, std::span<double> out);

// Text round-trip of a realization: header "# kg-lattice n=<N> w=<W>
// seed=<S>" then one eps per line at full precision.
void save_lattice(const Lattice& lat, const std::string& path);
Lattice load_lattice(const std::string& path);

}  // namespace kgsplit
