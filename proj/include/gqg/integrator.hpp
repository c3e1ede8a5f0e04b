#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gqg/field.hpp"
#include "gqg/rhs.hpp"
#include "gqg/run_record.hpp"

namespace gqg {

struct StepperConfig {
    double dt = 1e-3;
    double cfl_safety = 0.5;  // dt <= cfl_safety * dx / max|u| when adaptive
    bool adaptive = false;
    double t_end = 1.0;
    // Disable the nonlinear term (linear-flow surrogate: pure fractional heat).
    bool linear_only = false;
};

// Stepper state. diss_integral accumulates int_0^t ||Lambda^alpha theta||^2 ds
// with the RK4 stage quadrature (order 4), for energy-balance diagnostics.
struct IntegratingFactorState {
    SpectralField theta;
    double time = 0.0;
    double diss_integral = 0.0;
};

// One RK4 step of the integrating-factor transformed system: the dissipative
// factor e^{-nu |k|^{2 alpha} dt} is applied exactly, so with the nonlinearity
// off the step is exact. Returns false when the result is non-finite.
bool step(IntegratingFactorState& state, const ModelParams& params, double dt,
          const NonlinearEvaluator& evaluator, bool linear_only = false);

enum class RunStatus { Completed, BlowUpSuspected };

struct RunResult {
    RunRecord record;
    RunStatus status = RunStatus::Completed;
    double failure_time = 0.0;  // valid when status != Completed
};

// Observers append named scalars to each sample; they see a read-only state.
using Observer =
    std::function<void(const IntegratingFactorState&, std::map<std::string, double>&)>;

// Advance to each sample time in turn (uniform sub-steps of at most cfg.dt per
// interval; CFL-limited when adaptive), sampling observers at t=0 and at every
// sample time. Deterministic. sample_times must be strictly increasing and
// positive; the last one is the end of the run (cfg.t_end ignored here).
RunResult run(const SpectralField& theta0, const ModelParams& params, const StepperConfig& cfg,
              const NonlinearEvaluator& evaluator, const std::vector<Observer>& observers,
              const std::vector<double>& sample_times);

// Convenience: n_samples times spaced logarithmically from t_first to t_end
// (t_first defaults to t_end/1000).
std::vector<double> log_sample_times(double t_end, int n_samples, double t_first = 0.0);

// max physical |u| for the CFL estimate
double max_velocity(const SpectralField& theta, const ModelParams& params);

}  // namespace gqg
