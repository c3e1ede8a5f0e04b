#include "gqg/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gqg {
namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot read " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_text(ss.str());
}

KeyValueConfig KeyValueConfig::parse_text(const std::string& text) {
    KeyValueConfig cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
        if (cfg.kv_.count(key))
            throw ConfigError("config: duplicate key " + key);
        cfg.kv_[key] = val;
        cfg.used_[key] = false;
    }
    return cfg;
}

bool KeyValueConfig::has(const std::string& key) const { return kv_.count(key) != 0; }

std::string KeyValueConfig::get_string(const std::string& key) {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("config: missing required key " + key);
    used_[key] = true;
    return it->second;
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) {
    return has(key) ? get_string(key) : fallback;
}

double KeyValueConfig::get_double(const std::string& key) {
    const std::string s = get_string(key);
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ConfigError("config: key " + key + " is not a number: " + s);
    return v;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) {
    return has(key) ? get_double(key) : fallback;
}

int KeyValueConfig::get_int(const std::string& key) {
    double v = get_double(key);
    int i = int(v);
    if (double(i) != v) throw ConfigError("config: key " + key + " is not an integer");
    return i;
}

int KeyValueConfig::get_int(const std::string& key, int fallback) {
    return has(key) ? get_int(key) : fallback;
}

std::uint64_t KeyValueConfig::get_u64(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const std::string s = get_string(key);
    char* end = nullptr;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0')
        throw ConfigError("config: key " + key + " is not an unsigned integer: " + s);
    return v;
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const std::string s = get_string(key);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("config: key " + key + " is not a boolean: " + s);
}

void KeyValueConfig::reject_unknown() const {
    std::string bad;
    for (const auto& [key, used] : used_)
        if (!used) bad += (bad.empty() ? "" : ", ") + key;
    if (!bad.empty()) throw ConfigError("config: unknown keys: " + bad);
}

std::uint64_t KeyValueConfig::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& [key, val] : kv_) {  // std::map: sorted, canonical
        mix(key);
        mix("=");
        mix(val);
        mix("\n");
    }
    return h;
}

const char* experiment_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Decay: return "decay";
        case ExperimentKind::Smoothing: return "smoothing";
        case ExperimentKind::Analyticity: return "analyticity";
        case ExperimentKind::MocPreserve: return "moc_preserve";
        case ExperimentKind::Convergence: return "convergence";
        case ExperimentKind::Certify: return "certify";
        case ExperimentKind::SmallnessSweep: return "smallness_sweep";
    }
    return "?";
}

namespace {

ExperimentKind parse_experiment(const std::string& s) {
    for (ExperimentKind k :
         {ExperimentKind::Decay, ExperimentKind::Smoothing, ExperimentKind::Analyticity,
          ExperimentKind::MocPreserve, ExperimentKind::Convergence, ExperimentKind::Certify,
          ExperimentKind::SmallnessSweep})
        if (s == experiment_name(k)) return k;
    throw ConfigError("config: unknown experiment: " + s);
}

ExperimentConfig build(KeyValueConfig& kv) {
    ExperimentConfig cfg;
    cfg.experiment = parse_experiment(kv.get_string("experiment"));

    cfg.model.alpha = kv.get_double("model.alpha");
    cfg.model.beta = kv.get_double("model.beta");
    cfg.model.nu = kv.get_double("model.nu", 1.0);
    try {
        cfg.model.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    cfg.N = kv.get_int("grid.N", 32);
    cfg.M = kv.get_int("grid.M", 0);
    try {
        (void)cfg.grid();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    cfg.stepper.dt = kv.get_double("stepper.dt", 1e-3);
    cfg.stepper.t_end = kv.get_double("stepper.t_end", 1.0);
    cfg.stepper.cfl_safety = kv.get_double("stepper.cfl_safety", 0.5);
    cfg.stepper.adaptive = kv.get_bool("stepper.adaptive", false);
    cfg.stepper.linear_only = kv.get_bool("stepper.linear_only", false);
    if (cfg.stepper.dt <= 0.0 || cfg.stepper.t_end < 0.0)
        throw ConfigError("config: stepper.dt must be > 0 and stepper.t_end >= 0");

    cfg.initial.kind = kv.get_string("initial.kind", "random_band_limited");
    cfg.initial.k1 = kv.get_int("initial.k1", 1);
    cfg.initial.k2 = kv.get_int("initial.k2", 0);
    cfg.initial.amplitude = kv.get_double("initial.amplitude", 1.0);
    cfg.initial.slope = kv.get_double("initial.slope", 3.0);
    cfg.initial.band = kv.get_int("initial.band", std::min(8, cfg.N));
    cfg.initial.seed = kv.get_u64("initial.seed", 1);
    cfg.initial.path = kv.get_string("initial.path", "");
    cfg.initial.scale = kv.get_double("initial.scale", 1.0);
    if (cfg.initial.kind != "single_mode" && cfg.initial.kind != "multi_mode" &&
        cfg.initial.kind != "random_band_limited" && cfg.initial.kind != "file" &&
        cfg.initial.kind != "zero")
        throw ConfigError("config: unknown initial.kind: " + cfg.initial.kind);
    if (cfg.initial.kind == "file" && cfg.initial.path.empty())
        throw ConfigError("config: initial.kind=file needs initial.path");

    cfg.moc.search = kv.get_bool("moc.search", true);
    cfg.moc.r = kv.get_double("moc.r", cfg.model.regime() == Regime::Subcritical ? 1.5 : 1.2);
    cfg.moc.tail_exponent = kv.get_double("moc.tail_exponent", 0.9);
    cfg.moc.delta = kv.get_double("moc.delta", 0.0);
    cfg.moc.gamma = kv.get_double("moc.gamma", 0.0);
    cfg.moc.C1 = kv.get_double("moc.C1", 1.0);
    cfg.moc.C2 = kv.get_double("moc.C2", 1.0);

    cfg.output_dir = kv.get_string("output.dir", "");
    cfg.snapshot_count = kv.get_int("output.snapshots", 0);
    cfg.diag_s = kv.get_double("diag.s", 0.0);
    cfg.diag_n = kv.get_int("diag.n", 1);
    cfg.convergence_n2 = kv.get_int("convergence.n2", 2 * cfg.N);
    cfg.sweep_count = kv.get_int("sweep.count", 8);
    cfg.sweep_lo = kv.get_double("sweep.lo", 0.01);
    cfg.sweep_hi = kv.get_double("sweep.hi", 10.0);

    // regime gates, ahead of any compute
    const Regime reg = cfg.model.regime();
    if (cfg.experiment == ExperimentKind::SmallnessSweep && reg != Regime::Supercritical)
        throw ConfigError("config: smallness_sweep requires alpha+beta < 1");
    if (cfg.experiment == ExperimentKind::Certify && reg == Regime::Critical)
        throw ConfigError("config: certify requires a non-critical regime");
    if (cfg.experiment == ExperimentKind::Certify && reg == Regime::Subcritical &&
        !(cfg.model.alpha > 0.5 && cfg.model.alpha < 1.0 && cfg.model.beta > 0.5 &&
          cfg.model.beta < 1.0))
        throw ConfigError("config: subcritical certify requires alpha, beta in (1/2,1)");
    if (cfg.experiment == ExperimentKind::MocPreserve && reg == Regime::Critical)
        throw ConfigError("config: moc_preserve requires a non-critical regime");

    kv.reject_unknown();
    cfg.config_hash = kv.hash();
    return cfg;
}

}  // namespace

ExperimentConfig load_experiment_config(const std::string& path) {
    KeyValueConfig kv = KeyValueConfig::parse_file(path);
    return build(kv);
}

ExperimentConfig experiment_config_from_text(const std::string& text) {
    KeyValueConfig kv = KeyValueConfig::parse_text(text);
    return build(kv);
}

}  // namespace gqg
