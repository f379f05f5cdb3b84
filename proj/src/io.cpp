#include "kgsplit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kgsplit {
namespace {

constexpr double kLogSentinel = -16.0;

double safe_log10(double v) { return v > 0 ? std::log10(v) : kLogSentinel; }

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for '" + key +
                                    "': " + v);
    }
}

const std::vector<std::string>& canonical_keys() {
    static const std::vector<std::string> keys = {
        "scheme", "tau",     "sites", "w",   "seed",
        "energy", "t-end",   "samples", "out", "runs"};
    return keys;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_csv(const std::vector<ObservationRecord>& records) {
    std::ostringstream os;
    os << "t,log10_ree,log10_m2,p,wall_seconds,grad_evals\n";
    for (const ObservationRecord& r : records) {
        os << format_double(r.t) << ',' << format_double(safe_log10(r.ree))
           << ',' << format_double(safe_log10(r.m2)) << ','
           << format_double(r.p) << ',' << format_double(r.wall_seconds)
           << ',' << r.grad_evals << '\n';
    }
    return os.str();
}

void write_csv(const std::string& path,
               const std::vector<ObservationRecord>& records,
               const BenchRow& summary) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_csv: cannot open " + path);
    f << "# scheme=" << summary.scheme << " tau=" << format_double(summary.tau)
      << " max_ree=" << format_double(summary.max_ree)
      << (summary.aborted ? " ABORTED" : "") << '\n';
    f << format_csv(records);
}

bool ConfigFile::has(const std::string& key) const {
    return std::find(keys_seen.begin(), keys_seen.end(), key) !=
           keys_seen.end();
}

ConfigFile parse_config(const std::string& text) {
    ConfigFile cfg;
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<std::string, std::string>> kv;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value: " + line);
        kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    for (auto& [key, value] : kv) {
        if (key == "scheme") cfg.base.scheme = value;
        else if (key == "tau") cfg.base.tau = parse_double(value, key);
        else if (key == "sites")
            cfg.base.sites = static_cast<std::size_t>(
                std::llround(parse_double(value, key)));
        else if (key == "w") cfg.base.w = parse_double(value, key);
        else if (key == "seed")
            cfg.base.seed = static_cast<std::uint64_t>(std::stoull(value));
        else if (key == "energy") cfg.base.energy = parse_double(value, key);
        else if (key == "t-end") cfg.base.t_end = parse_double(value, key);
        else if (key == "samples")
            cfg.base.samples = static_cast<int>(std::llround(
                parse_double(value, key)));
        else if (key == "out") cfg.base.out = value;
        else if (key == "runs") {
            std::istringstream rs(value);
            std::string item;
            while (std::getline(rs, item, ',')) {
                item = trim(item);
                if (item.empty()) continue;
                auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument(
                        "config: runs entries must be scheme:tau, got " + item);
                cfg.runs.emplace_back(
                    trim(item.substr(0, colon)),
                    parse_double(trim(item.substr(colon + 1)), "runs"));
            }
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
        if (!cfg.has(key)) cfg.keys_seen.push_back(key);
    }
    // keep canonical serialization order regardless of input order
    std::stable_sort(cfg.keys_seen.begin(), cfg.keys_seen.end(),
                     [](const std::string& a, const std::string& b) {
                         const auto& ck = canonical_keys();
                         return std::find(ck.begin(), ck.end(), a) <
                                std::find(ck.begin(), ck.end(), b);
                     });
    return cfg;
}

ConfigFile load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const ConfigFile& cfg) {
    std::ostringstream os;
    for (const std::string& key : cfg.keys_seen) {
        os << key << " = ";
        if (key == "scheme") os << cfg.base.scheme;
        else if (key == "tau") os << format_double(cfg.base.tau);
        else if (key == "sites") os << cfg.base.sites;
        else if (key == "w") os << format_double(cfg.base.w);
        else if (key == "seed") os << cfg.base.seed;
        else if (key == "energy") os << format_double(cfg.base.energy);
        else if (key == "t-end") os << format_double(cfg.base.t_end);
        else if (key == "samples") os << cfg.base.samples;
        else if (key == "out") os << cfg.base.out;
        else if (key == "runs") {
            for (std::size_t i = 0; i < cfg.runs.size(); ++i) {
                if (i) os << ", ";
                os << cfg.runs[i].first << ':'
                   << format_double(cfg.runs[i].second);
            }
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace kgsplit
