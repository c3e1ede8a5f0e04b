#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "gqg/grid.hpp"
#include "gqg/integrator.hpp"

namespace gqg {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat "dotted.key = value" file, '#' comments, one pair per line. Every key
// must be consumed by the experiment that reads it; leftovers are rejected.
class KeyValueConfig {
  public:
    static KeyValueConfig parse_file(const std::string& path);
    static KeyValueConfig parse_text(const std::string& text);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key);
    std::string get_string(const std::string& key, const std::string& fallback);
    double get_double(const std::string& key);
    double get_double(const std::string& key, double fallback);
    int get_int(const std::string& key);
    int get_int(const std::string& key, int fallback);
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback);
    bool get_bool(const std::string& key, bool fallback);

    // throws ConfigError listing any key never consumed
    void reject_unknown() const;

    // FNV-1a over the canonical "key=value\n" listing (sorted keys)
    std::uint64_t hash() const;

  private:
    std::map<std::string, std::string> kv_;
    std::map<std::string, bool> used_;
};

enum class ExperimentKind {
    Decay,
    Smoothing,
    Analyticity,
    MocPreserve,
    Convergence,
    Certify,
    SmallnessSweep,
};

const char* experiment_name(ExperimentKind k);

struct InitialDataSpec {
    std::string kind = "random_band_limited";  // single_mode | multi_mode |
                                               // random_band_limited | file | zero
    int k1 = 1, k2 = 0;
    double amplitude = 1.0;
    double slope = 3.0;
    int band = 8;
    std::uint64_t seed = 1;
    std::string path;
    double scale = 1.0;  // global multiplier applied after generation
};

struct MocConfigSpec {
    bool search = true;       // sweep delta/gamma; otherwise use the pair below
    double r = 1.5;
    double tail_exponent = 0.9;  // supercritical only
    double delta = 0.0, gamma = 0.0;
    double C1 = 1.0, C2 = 1.0;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Decay;
    ModelParams model;
    int N = 32;
    int M = 0;  // 0: default 2N+2
    StepperConfig stepper;
    InitialDataSpec initial;
    MocConfigSpec moc;
    std::string output_dir;  // empty: derived from output root + experiment
    int snapshot_count = 0;  // field snapshots at log-spaced times
    double diag_s = 0.0;     // Sobolev index tracked in the record
    int diag_n = 1;          // smoothing order for the extra hs column
    int convergence_n2 = 0;  // second resolution (convergence experiment)
    int sweep_count = 8;     // smallness_sweep: number of amplitude scales
    double sweep_lo = 0.01, sweep_hi = 10.0;
    std::uint64_t config_hash = 0;

    Grid grid() const { return M > 0 ? Grid(N, M) : Grid::with_default_m(N); }
};

// Parses and validates (regime gates included); throws ConfigError.
ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig experiment_config_from_text(const std::string& text);

}  // namespace gqg
