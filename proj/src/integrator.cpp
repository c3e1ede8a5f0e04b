#include "gqg/integrator.hpp"

#include <cmath>
#include <stdexcept>

#include "gqg/reduce.hpp"
#include "gqg/spectral_ops.hpp"
#include "gqg/transform.hpp"

namespace gqg {
namespace {

// c(k) *= e^{-nu |k|^{2 alpha} s}
void apply_decay(SpectralField& f, const ModelParams& p, double s) {
    const int N = f.grid().N;
#pragma omp parallel for schedule(static)
    for (int k1 = -N; k1 <= N; ++k1) {
        for (int k2 = -N; k2 <= N; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            double lam = std::pow(double(k1) * k1 + double(k2) * k2, p.alpha);
            f.at(k1, k2) *= std::exp(-p.nu * lam * s);
        }
    }
}

// ||Lambda^alpha theta||^2 = sum_{k!=0} |k|^{2 alpha} |theta_hat|^2
double dissipation_functional(const SpectralField& f, const ModelParams& p) {
    const int N = f.grid().N;
    std::vector<double> terms;
    terms.reserve(f.coeffs().size());
    for (int k1 = -N; k1 <= N; ++k1) {
        for (int k2 = -N; k2 <= N; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            double lam = std::pow(double(k1) * k1 + double(k2) * k2, p.alpha);
            terms.push_back(lam * std::norm(f.at(k1, k2)));
        }
    }
    return pairwise_sum(terms);
}

SpectralField nonlinear(const SpectralField& theta, const ModelParams& p,
                        const NonlinearEvaluator& ev, bool linear_only) {
    if (linear_only) return SpectralField(theta.grid());
    return nonlinear_term(theta, p, ev);
}

void axpy(SpectralField& y, double a, const SpectralField& x) {
    auto& yc = y.coeffs();
    const auto& xc = x.coeffs();
    for (size_t i = 0; i < yc.size(); ++i) yc[i] += a * xc[i];
}

}  // namespace

bool step(IntegratingFactorState& state, const ModelParams& params, double dt,
          const NonlinearEvaluator& evaluator, bool linear_only) {
    // Classical RK4 on xi(t) = theta_hat e^{nu |k|^{2a}(t - t_n)}, written so
    // that only decaying exponentials appear:
    //   a2 = D(h/2)(theta + h/2 N1)        N_i = B(a_i)
    //   a3 = D(h/2) theta + h/2 N2
    //   a4 = D(h) theta + h D(h/2) N3
    //   theta' = D(h) theta + h/6 [D(h) N1 + 2 D(h/2) (N2 + N3) + N4]
    // with D(s) = e^{-nu |k|^{2a} s}. B == 0 gives the exact decay step.
    const SpectralField& th = state.theta;
    const ModelParams& p = params;
    const double h = dt;

    SpectralField n1 = nonlinear(th, p, evaluator, linear_only);

    SpectralField a2 = th;
    axpy(a2, h / 2, n1);
    apply_decay(a2, p, h / 2);
    SpectralField n2 = nonlinear(a2, p, evaluator, linear_only);

    SpectralField a3 = th;
    apply_decay(a3, p, h / 2);
    axpy(a3, h / 2, n2);
    SpectralField n3 = nonlinear(a3, p, evaluator, linear_only);

    SpectralField a4 = th;
    apply_decay(a4, p, h);
    SpectralField n3d = n3;
    apply_decay(n3d, p, h / 2);
    axpy(a4, h, n3d);
    SpectralField n4 = nonlinear(a4, p, evaluator, linear_only);

    // RK4 quadrature of the dissipation functional along the same stages
    double f1 = dissipation_functional(th, p);
    double f2 = dissipation_functional(a2, p);
    double f3 = dissipation_functional(a3, p);
    double f4 = dissipation_functional(a4, p);

    SpectralField next = th;
    axpy(next, h / 6, n1);
    apply_decay(next, p, h);  // D(h)(theta + h/6 N1)
    SpectralField n23 = n2;
    axpy(n23, 1.0, n3);
    apply_decay(n23, p, h / 2);
    axpy(next, h / 3, n23);
    axpy(next, h / 6, n4);

    state.theta = std::move(next);
    state.theta.enforce_hermitian();
    state.time += h;
    state.diss_integral += h / 6 * (f1 + 2 * f2 + 2 * f3 + f4);
    return state.theta.finite();
}

double max_velocity(const SpectralField& theta, const ModelParams& params) {
    auto [u1s, u2s] = velocity_from_theta(theta, params);
    PhysicalField u1 = to_physical(u1s);
    PhysicalField u2 = to_physical(u2s);
    double m = 0.0;
    for (size_t i = 0; i < u1.values().size(); ++i) {
        double s = std::hypot(u1.values()[i], u2.values()[i]);
        m = std::max(m, s);
    }
    return m;
}

std::vector<double> log_sample_times(double t_end, int n_samples, double t_first) {
    if (t_end <= 0.0 || n_samples < 1) throw std::invalid_argument("log_sample_times");
    if (t_first <= 0.0) t_first = t_end / 1000.0;
    std::vector<double> t(n_samples);
    if (n_samples == 1) {
        t[0] = t_end;
        return t;
    }
    double ratio = std::log(t_end / t_first) / (n_samples - 1);
    for (int i = 0; i < n_samples; ++i) t[i] = t_first * std::exp(ratio * i);
    t.back() = t_end;
    return t;
}

RunResult run(const SpectralField& theta0, const ModelParams& params, const StepperConfig& cfg,
              const NonlinearEvaluator& evaluator, const std::vector<Observer>& observers,
              const std::vector<double>& sample_times) {
    RunResult result;
    IntegratingFactorState state{theta0, 0.0, 0.0};

    auto sample = [&](const IntegratingFactorState& s) {
        std::map<std::string, double> scalars;
        for (const auto& obs : observers) obs(s, scalars);
        if (result.record.samples().empty() && s.time == 0.0)
            result.record.add_sample(0.0, scalars);
        else
            result.record.add_sample(s.time, scalars);
    };

    sample(state);
    for (double t_target : sample_times) {
        if (t_target <= state.time)
            throw std::invalid_argument("run: sample times must strictly increase from 0");
        while (state.time < t_target) {
            double h = std::min(cfg.dt, t_target - state.time);
            if (cfg.adaptive && !cfg.linear_only) {
                double umax = max_velocity(state.theta, params);
                if (umax > 0.0) {
                    double h_cfl = cfg.cfl_safety * state.theta.grid().dx() / umax;
                    h = std::min(h, h_cfl);
                }
            }
            // land exactly on the sample time
            if (state.time + h > t_target) h = t_target - state.time;
            bool ok = step(state, params, h, evaluator, cfg.linear_only);
            if (!ok) {
                result.status = RunStatus::BlowUpSuspected;
                result.failure_time = state.time;
                return result;
            }
        }
        state.time = t_target;  // absorb accumulated round-off in t
        sample(state);
    }
    return result;
}

}  // namespace gqg
