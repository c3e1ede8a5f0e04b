#include "gqg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "gqg/diagnostics.hpp"
#include "gqg/field_io.hpp"
#include "gqg/initial_data.hpp"
#include "gqg/integrator.hpp"
#include "gqg/reduce.hpp"
#include "gqg/transform.hpp"

namespace fs = std::filesystem;

namespace gqg {

const char* version_string() { return "gqg 0.1.0"; }

std::string output_root() {
    if (const char* env = std::getenv("GQG_OUTPUT_ROOT"); env && *env) return env;
    return "gqg-out";
}

SpectralField generate_initial_data(const InitialDataSpec& spec, const Grid& g) {
    SpectralField f(g);
    if (spec.kind == "zero") {
        // already zero
    } else if (spec.kind == "single_mode") {
        f = single_mode(g, spec.k1, spec.k2, spec.amplitude);
    } else if (spec.kind == "multi_mode") {
        // fixed two-mode combination; per-mode lists go through `file`
        f = multi_mode(g, {{spec.k1, spec.k2, spec.amplitude},
                           {spec.k2, spec.k1, spec.amplitude}});
    } else if (spec.kind == "random_band_limited") {
        f = random_band_limited(g, spec.slope, spec.band, spec.seed);
        if (spec.amplitude != 1.0)
            for (auto& c : f.coeffs()) c *= spec.amplitude;
    } else if (spec.kind == "file") {
        f = from_file(g, spec.path);
    } else {
        throw ConfigError("initial data: unknown kind " + spec.kind);
    }
    if (spec.scale != 1.0)
        for (auto& c : f.coeffs()) c *= spec.scale;
    return f;
}

namespace {

std::string hash_hex(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct ArtifactWriter {
    fs::path dir;
    ExperimentResult* res;

    std::ofstream open(const std::string& name) const {
        fs::path p = dir / name;
        std::ofstream os(p);
        if (!os) throw std::runtime_error("cannot write artifact " + p.string());
        res->artifacts.push_back(p.string());
        return os;
    }
};

void stamp(RunRecord& rec, const ExperimentConfig& cfg) {
    rec.metadata()["version"] = version_string();
    rec.metadata()["config_hash"] = hash_hex(cfg.config_hash);
    rec.metadata()["experiment"] = experiment_name(cfg.experiment);
}

void write_record(const ArtifactWriter& w, const RunRecord& rec) {
    {
        auto os = w.open("record.csv");
        rec.write_csv(os);
    }
    {
        auto os = w.open("record.json");
        rec.write_json(os);
    }
}

void write_metadata(const ArtifactWriter& w, const ExperimentConfig& cfg,
                    const nlohmann::json& extra) {
    nlohmann::json j = extra;
    j["version"] = version_string();
    j["config_hash"] = hash_hex(cfg.config_hash);
    j["experiment"] = experiment_name(cfg.experiment);
    auto os = w.open("metadata.json");
    os << j.dump(2) << "\n";
}

void write_certificate(const ArtifactWriter& w, const CertificateReport& rep) {
    {
        auto os = w.open("certificate.json");
        rep.write_json(os);
    }
    {
        auto os = w.open("margins.csv");
        rep.write_margins_csv(os);
    }
}

// shared time-stepping path: observers + optional snapshots
struct RunSetup {
    std::vector<double> sample_times;
    std::vector<Observer> observers;
};

RunResult timed_run(const ExperimentConfig& cfg, const SpectralField& theta0,
                    const RunSetup& setup) {
    NonlinearEvaluator eval;
    return run(theta0, cfg.model, cfg.stepper, eval, setup.observers, setup.sample_times);
}

Observer norm_observer(const ExperimentConfig& cfg, bool with_sup) {
    const double s = cfg.diag_s;
    const ModelParams params = cfg.model;
    return [s, params, with_sup](const IntegratingFactorState& st,
                                 std::map<std::string, double>& out) {
        out["l2"] = sobolev_norm(st.theta, 0.0);
        out["diss"] = st.diss_integral;
        if (s != 0.0) out[hs_column(s)] = sobolev_norm(st.theta, s);
        if (with_sup) {
            auto [linf, grad] = linf_and_grad(st.theta);
            out["linf"] = linf;
            out["grad"] = grad;
        }
    };
}

Observer snapshot_observer(const ArtifactWriter& w, const std::vector<double>& snap_times) {
    auto remaining = std::make_shared<std::vector<double>>(snap_times);
    auto counter = std::make_shared<int>(0);
    ArtifactWriter writer = w;
    return [remaining, counter, writer](const IntegratingFactorState& st,
                                        std::map<std::string, double>&) {
        auto it = std::find(remaining->begin(), remaining->end(), st.time);
        if (it == remaining->end()) return;
        remaining->erase(it);
        char name[48];
        std::snprintf(name, sizeof name, "snap_%03d.gqg1", (*counter)++);
        fs::path p = writer.dir / name;
        write_snapshot(p.string(), to_physical(st.theta), st.time);
        writer.res->artifacts.push_back(p.string());
    };
}

int finish_run(const ExperimentConfig& cfg, const ArtifactWriter& w, RunResult& rr,
               nlohmann::json extra, ExperimentResult& res) {
    stamp(rr.record, cfg);
    write_record(w, rr.record);
    if (rr.status == RunStatus::BlowUpSuspected) {
        extra["blow_up_suspected_at"] = rr.failure_time;
        write_metadata(w, cfg, extra);
        res.message = "blow-up suspected at t=" + std::to_string(rr.failure_time);
        return kExitBlowUpSuspected;
    }
    write_metadata(w, cfg, extra);
    return kExitSuccess;
}

Moc obtain_moc(const ExperimentConfig& cfg, CertificateReport& rep, bool& certified) {
    if (cfg.moc.search) {
        SearchResult sr = search_parameters(cfg.model, cfg.moc.r, cfg.moc.tail_exponent,
                                            cfg.moc.C1, cfg.moc.C2);
        rep = sr.report;
        certified = sr.moc.has_value();
        if (certified) return *sr.moc;
        // fall back to the best attempt's parameters for reporting
        return rep.moc;
    }
    Moc m = cfg.model.regime() == Regime::Subcritical
                ? make_subcritical_moc(cfg.model, cfg.moc.r, cfg.moc.delta, cfg.moc.gamma)
                : make_supercritical_moc(cfg.model, cfg.moc.r, cfg.moc.tail_exponent,
                                         cfg.moc.delta, cfg.moc.gamma);
    rep = certify(m, cfg.moc.C1, cfg.moc.C2);
    certified = rep.certified;
    return m;
}

int run_decay(const ExperimentConfig& cfg, const ArtifactWriter& w, ExperimentResult& res) {
    SpectralField theta0 = generate_initial_data(cfg.initial, cfg.grid());
    RunSetup setup;
    setup.sample_times = log_sample_times(cfg.stepper.t_end, 16);
    setup.observers.push_back(norm_observer(cfg, true));
    std::vector<double> snap_times;
    if (cfg.snapshot_count > 0) {
        snap_times = log_sample_times(cfg.stepper.t_end, cfg.snapshot_count);
        for (double t : snap_times)
            if (std::find(setup.sample_times.begin(), setup.sample_times.end(), t) ==
                setup.sample_times.end())
                setup.sample_times.push_back(t);
        std::sort(setup.sample_times.begin(), setup.sample_times.end());
        setup.observers.push_back(snapshot_observer(w, snap_times));
    }
    RunResult rr = timed_run(cfg, theta0, setup);
    return finish_run(cfg, w, rr, {}, res);
}

int run_smoothing(const ExperimentConfig& cfg, const ArtifactWriter& w, ExperimentResult& res) {
    SpectralField theta0 = generate_initial_data(cfg.initial, cfg.grid());
    const double s = cfg.diag_s;
    const int n = cfg.diag_n;
    const ModelParams params = cfg.model;
    RunSetup setup;
    setup.sample_times = log_sample_times(cfg.stepper.t_end, 24, cfg.stepper.t_end * 1e-4);
    setup.observers.push_back(
        [s, n, params](const IntegratingFactorState& st, std::map<std::string, double>& out) {
            out["l2"] = sobolev_norm(st.theta, 0.0);
            out[hs_column(s)] = sobolev_norm(st.theta, s);
            out[hs_column(s + n * params.alpha)] = sobolev_norm(st.theta, s + n * params.alpha);
        });
    RunResult rr = timed_run(cfg, theta0, setup);
    nlohmann::json extra;
    if (rr.status == RunStatus::Completed) {
        const double t_lo = setup.sample_times.front();
        const double t_hi = setup.sample_times.back();
        extra["smoothing_slope"] = smoothing_rate_fit(rr.record, s, n, params, t_lo, t_hi);
        extra["expected_slope"] = -0.5 * n;
    }
    return finish_run(cfg, w, rr, extra, res);
}

int run_analyticity(const ExperimentConfig& cfg, const ArtifactWriter& w,
                    ExperimentResult& res) {
    SpectralField theta0 = generate_initial_data(cfg.initial, cfg.grid());
    const ModelParams params = cfg.model;
    RunSetup setup;
    setup.sample_times = log_sample_times(cfg.stepper.t_end, 16);
    setup.observers.push_back(
        [params](const IntegratingFactorState& st, std::map<std::string, double>& out) {
            out["l2"] = sobolev_norm(st.theta, 0.0);
            AnalyticityEstimate est = analyticity_radius(st.theta, params, st.time);
            out["delta"] = est.delta;
            out["fit_residual"] = est.fit_residual;
            out["Y3"] = est.Y3;
        });
    RunResult rr = timed_run(cfg, theta0, setup);
    return finish_run(cfg, w, rr, {}, res);
}

int run_moc_preserve(const ExperimentConfig& cfg, const ArtifactWriter& w,
                     ExperimentResult& res) {
    CertificateReport rep;
    bool certified = false;
    Moc moc = obtain_moc(cfg, rep, certified);
    write_certificate(w, rep);
    if (!certified) {
        write_metadata(w, cfg, {{"certified", false}});
        res.message = "no certified modulus of continuity for these parameters";
        return kExitCertificationFailed;
    }

    SpectralField theta0 = generate_initial_data(cfg.initial, cfg.grid());
    nlohmann::json extra;
    extra["certified"] = true;
    Moc scaled = moc;
    if (moc.regime == Regime::Supercritical) {
        SmallnessCheck sc = smallness_check(to_physical(theta0), moc, cfg.model);
        extra["smallness_satisfied"] = sc.satisfied;
        extra["smallness_lhs"] = sc.lhs;
        extra["smallness_c"] = sc.c;
        if (sc.grad_sup > 0.0) scaled = rescale_for_data(moc, sc.grad_sup);
    } else {
        auto [linf, grad] = linf_and_grad(theta0);
        (void)linf;
        if (grad > 0.0) scaled = rescale_for_data(moc, grad);
    }

    RunSetup setup;
    setup.sample_times = log_sample_times(cfg.stepper.t_end, 16);
    setup.observers.push_back(norm_observer(cfg, true));
    Moc scaled_copy = scaled;
    setup.observers.push_back([scaled_copy](const IntegratingFactorState& st,
                                            std::map<std::string, double>& out) {
        MocVerification v = verify_field_moc(to_physical(st.theta), scaled_copy);
        out["moc_worst_ratio"] = v.worst_ratio;
    });
    RunResult rr = timed_run(cfg, theta0, setup);
    double worst = 0.0;
    for (size_t i = 0; i < rr.record.samples().size(); ++i)
        worst = std::max(worst, rr.record.value(i, "moc_worst_ratio"));
    extra["moc_worst_ratio_max"] = worst;
    return finish_run(cfg, w, rr, extra, res);
}

int run_convergence(const ExperimentConfig& cfg, const ArtifactWriter& w,
                    ExperimentResult& res) {
    const int n1 = cfg.N, n2 = cfg.convergence_n2;
    if (n2 <= n1) throw ConfigError("convergence.n2 must exceed grid.N");
    auto run_at = [&](int n) {
        Grid g(n, std::max(2 * n + 2, cfg.M));
        SpectralField theta0 = generate_initial_data(cfg.initial, g);
        RunSetup setup;
        setup.sample_times = {cfg.stepper.t_end};
        SpectralField final_theta;
        setup.observers.push_back([&final_theta](const IntegratingFactorState& st,
                                                 std::map<std::string, double>& out) {
            out["l2"] = sobolev_norm(st.theta, 0.0);
            final_theta = st.theta;
        });
        RunResult rr = timed_run(cfg, theta0, setup);
        return std::pair{rr, final_theta};
    };
    auto [rr1, f1] = run_at(n1);
    auto [rr2, f2] = run_at(n2);
    if (rr1.status != RunStatus::Completed || rr2.status != RunStatus::Completed) {
        RunResult& bad = rr1.status != RunStatus::Completed ? rr1 : rr2;
        return finish_run(cfg, w, bad, {}, res);
    }
    // L2 distance over the union of lattices (coarse field is zero beyond N)
    std::vector<double> terms;
    for (int k1 = -n2; k1 <= n2; ++k1)
        for (int k2 = -n2; k2 <= n2; ++k2) {
            cplx a = f1.grid().in_lattice(k1, k2) ? f1.at(k1, k2) : cplx{0, 0};
            terms.push_back(std::norm(f2.at(k1, k2) - a));
        }
    double diff = std::sqrt(pairwise_sum(terms));
    nlohmann::json extra;
    extra["l2_difference"] = diff;
    extra["n_coarse"] = n1;
    extra["n_fine"] = n2;
    stamp(rr2.record, cfg);
    write_record(w, rr2.record);
    write_metadata(w, cfg, extra);
    res.message = "l2 difference " + std::to_string(diff);
    return kExitSuccess;
}

int run_certify(const ExperimentConfig& cfg, const ArtifactWriter& w, ExperimentResult& res) {
    CertificateReport rep;
    bool certified = false;
    Moc moc = obtain_moc(cfg, rep, certified);
    write_certificate(w, rep);
    nlohmann::json extra;
    extra["certified"] = certified;
    extra["delta"] = moc.delta;
    extra["gamma"] = moc.gamma;
    if (moc.regime == Regime::Supercritical && certified)
        extra["smallness_constant"] = smallness_constant(moc);
    write_metadata(w, cfg, extra);
    if (!certified) {
        res.message = "certification failed";
        return kExitCertificationFailed;
    }
    res.message = "certified delta=" + std::to_string(moc.delta) +
                  " gamma=" + std::to_string(moc.gamma);
    return kExitSuccess;
}

int run_smallness_sweep(const ExperimentConfig& cfg, const ArtifactWriter& w,
                        ExperimentResult& res) {
    CertificateReport rep;
    bool certified = false;
    Moc moc = obtain_moc(cfg, rep, certified);
    write_certificate(w, rep);
    if (!certified) {
        write_metadata(w, cfg, {{"certified", false}});
        res.message = "no certified modulus of continuity for these parameters";
        return kExitCertificationFailed;
    }
    SpectralField base = generate_initial_data(cfg.initial, cfg.grid());
    auto os = w.open("sweep.csv");
    os << "scale,lhs,c,satisfied,moc_worst_ratio\n";
    const int n = std::max(2, cfg.sweep_count);
    char buf[160];
    for (int i = 0; i < n; ++i) {
        const double scale = cfg.sweep_lo *
                             std::pow(cfg.sweep_hi / cfg.sweep_lo, i / double(n - 1));
        SpectralField f = base;
        for (auto& c : f.coeffs()) c *= scale;
        SmallnessCheck sc = smallness_check(to_physical(f), moc, cfg.model);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d,%.17g\n", scale, sc.lhs, sc.c,
                      sc.satisfied ? 1 : 0, sc.moc_worst_ratio);
        os << buf;
    }
    write_metadata(w, cfg, {{"certified", true}, {"smallness_constant", smallness_constant(moc)}});
    return kExitSuccess;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult res;
    fs::path dir = cfg.output_dir.empty()
                       ? fs::path(output_root()) / (std::string(experiment_name(cfg.experiment)) +
                                                    "-" + hash_hex(cfg.config_hash))
                       : fs::path(cfg.output_dir);
    fs::create_directories(dir);
    res.output_dir = dir.string();
    ArtifactWriter w{dir, &res};

    try {
        switch (cfg.experiment) {
            case ExperimentKind::Decay: res.exit_code = run_decay(cfg, w, res); break;
            case ExperimentKind::Smoothing: res.exit_code = run_smoothing(cfg, w, res); break;
            case ExperimentKind::Analyticity:
                res.exit_code = run_analyticity(cfg, w, res);
                break;
            case ExperimentKind::MocPreserve:
                res.exit_code = run_moc_preserve(cfg, w, res);
                break;
            case ExperimentKind::Convergence:
                res.exit_code = run_convergence(cfg, w, res);
                break;
            case ExperimentKind::Certify: res.exit_code = run_certify(cfg, w, res); break;
            case ExperimentKind::SmallnessSweep:
                res.exit_code = run_smallness_sweep(cfg, w, res);
                break;
        }
    } catch (const ConfigError& e) {
        res.exit_code = kExitConfigError;
        res.message = e.what();
    }
    if (res.message.empty() && res.exit_code == kExitSuccess) res.message = "ok";
    return res;
}

std::string moc_to_json_text(const Moc& m) {
    nlohmann::json j = {{"regime", regime_name(m.regime)},
                        {"alpha", m.alpha},
                        {"beta", m.beta},
                        {"r", m.r},
                        {"tail_exponent", m.tail_exponent},
                        {"delta", m.delta},
                        {"gamma", m.gamma},
                        {"lambda", m.lambda}};
    return j.dump(2) + "\n";
}

Moc moc_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Moc m;
    const std::string reg = j.at("regime").get<std::string>();
    if (reg == "subcritical")
        m.regime = Regime::Subcritical;
    else if (reg == "supercritical")
        m.regime = Regime::Supercritical;
    else
        throw InvalidMoc("moc json: unknown regime " + reg);
    m.alpha = j.at("alpha").get<double>();
    m.beta = j.at("beta").get<double>();
    m.r = j.at("r").get<double>();
    m.tail_exponent = j.at("tail_exponent").get<double>();
    m.delta = j.at("delta").get<double>();
    m.gamma = j.at("gamma").get<double>();
    m.lambda = j.value("lambda", 1.0);
    m.validate();
    return m;
}

Moc moc_from_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read moc json " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return moc_from_json_text(ss.str());
}

}  // namespace gqg
