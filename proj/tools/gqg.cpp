#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "gqg/certify.hpp"
#include "gqg/config.hpp"
#include "gqg/experiments.hpp"
#include "gqg/field_io.hpp"
#include "gqg/transform.hpp"

namespace {

int do_experiment(const std::string& config_path, bool force_certify) {
    gqg::ExperimentConfig cfg;
    try {
        cfg = gqg::load_experiment_config(config_path);
    } catch (const gqg::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return gqg::kExitConfigError;
    }
    if (force_certify) cfg.experiment = gqg::ExperimentKind::Certify;
    gqg::ExperimentResult res = gqg::run_experiment(cfg);
    std::printf("%s: %s\n", gqg::experiment_name(cfg.experiment), res.message.c_str());
    std::printf("artifacts in %s\n", res.output_dir.c_str());
    return res.exit_code;
}

int do_verify(const std::string& field_path, const std::string& moc_path) {
    gqg::Moc moc = gqg::moc_from_json_file(moc_path);
    gqg::PhysicalField field;
    if (gqg::is_spectral_path(field_path))
        field = gqg::to_physical(gqg::read_spectral_snapshot(field_path).field);
    else
        field = gqg::read_physical_snapshot(field_path).field;
    gqg::MocVerification v = gqg::verify_field_moc(field, moc);
    std::printf("holds: %s\nworst_ratio: %.17g\nworst_distance: %.17g\n"
                "worst_pair: (%.6g, %.6g) vs (%.6g, %.6g)\n",
                v.holds ? "true" : "false", v.worst_ratio, v.worst_distance, v.worst_pair[0],
                v.worst_pair[1], v.worst_pair[2], v.worst_pair[3]);
    return v.holds ? gqg::kExitSuccess : gqg::kExitCertificationFailed;
}

int do_info(const std::string& field_path) {
    gqg::SnapshotInfo info = gqg::read_snapshot_info(field_path);
    std::printf("kind: %s\nN: %d\nM: %d\ntime: %.17g\nmax_abs: %.17g\n",
                info.spectral ? "spectral" : "physical", info.N, info.M, info.time,
                info.max_abs);
    return gqg::kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-spectral simulator and inequality certifier for generalized "
                 "quasi-geostrophic flow on the 2-torus"};
    app.require_subcommand(1);

    std::string config_path, field_path, moc_path;

    auto* run_cmd = app.add_subcommand("run", "run the experiment described by a config file");
    run_cmd->add_option("config", config_path, "key = value config file")->required();

    auto* cert_cmd =
        app.add_subcommand("certify", "run the certification experiment for a config");
    cert_cmd->add_option("config", config_path, "key = value config file")->required();

    auto* verify_cmd = app.add_subcommand(
        "verify-moc", "check a field snapshot against a modulus of continuity");
    verify_cmd->add_option("field-file", field_path, "snapshot (.gqg1 or .spec)")->required();
    verify_cmd->add_option("moc-json", moc_path, "modulus parameters as JSON")->required();

    auto* info_cmd = app.add_subcommand("info", "print snapshot header information");
    info_cmd->add_option("field-file", field_path, "snapshot (.gqg1 or .spec)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return do_experiment(config_path, false);
        if (cert_cmd->parsed()) return do_experiment(config_path, true);
        if (verify_cmd->parsed()) return do_verify(field_path, moc_path);
        if (info_cmd->parsed()) return do_info(field_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return gqg::kExitConfigError;
    }
    return gqg::kExitConfigError;
}
