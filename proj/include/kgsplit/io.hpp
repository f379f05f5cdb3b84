#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kgsplit/harness.hpp"

namespace kgsplit {

// CSV with header t,log10_ree,log10_m2,p,wall_seconds,grad_evals; numbers
// in shortest round-trip form; log10 of a non-positive value is written as
// the sentinel -16.
std::string format_csv(const std::vector<ObservationRecord>& records);
void write_csv(const std::string& path,
               const std::vector<ObservationRecord>& records,
               const BenchRow& summary);

// Flat key = value run description ('#' comments allowed).  Keys match the
// CLI flag names: scheme, tau, sites, w, seed, energy, t-end, samples, out,
// plus `runs` (comma list of scheme:tau pairs) for bench presets.
struct ConfigFile {
    RunConfig base;
    std::vector<std::pair<std::string, double>> runs;

    bool has(const std::string& key) const;
    std::vector<std::string> keys_seen;  // in canonical order
};

ConfigFile parse_config(const std::string& text);
ConfigFile load_config(const std::string& path);
std::string serialize_config(const ConfigFile& cfg);

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace kgsplit
