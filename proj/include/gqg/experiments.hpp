#pragma once

#include <string>
#include <vector>

#include "gqg/certify.hpp"
#include "gqg/config.hpp"
#include "gqg/field.hpp"

namespace gqg {

// process exit codes shared with the CLI
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCertificationFailed = 2;
inline constexpr int kExitBlowUpSuspected = 3;
inline constexpr int kExitConfigError = 4;

const char* version_string();

// Root directory for artifacts: $GQG_OUTPUT_ROOT when set, else "./gqg-out".
std::string output_root();

struct ExperimentResult {
    int exit_code = kExitSuccess;
    std::string message;
    std::string output_dir;
    std::vector<std::string> artifacts;  // paths written
};

SpectralField generate_initial_data(const InitialDataSpec& spec, const Grid& g);

// Runs the configured experiment and writes its artifacts (record CSV/JSON,
// optional snapshots, certificate report, metadata with config hash +
// version). Deterministic for a fixed config.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Moc JSON round trip (the `verify-moc` input format).
std::string moc_to_json_text(const Moc& m);
Moc moc_from_json_text(const std::string& text);
Moc moc_from_json_file(const std::string& path);

}  // namespace gqg
