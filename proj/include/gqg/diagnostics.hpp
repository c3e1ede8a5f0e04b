#pragma once

#include <utility>

#include "gqg/field.hpp"
#include "gqg/run_record.hpp"

namespace gqg {

// Inhomogeneous H^s norm (mean with unit weight):
//   (|theta_hat(0)|^2 + sum_{k!=0} |k|^{2s} |theta_hat(k)|^2)^{1/2}
// homogeneous=true excludes the mean mode.
double sobolev_norm(const SpectralField& f, double s, bool homogeneous = false);

// (sup|theta|, sup|grad theta|), sampled on a grid refined `refine`x beyond M.
// Lower bounds on the true sups of the trigonometric polynomial.
std::pair<double, double> linf_and_grad(const SpectralField& f, int refine = 2);

struct AnalyticityEstimate {
    double delta = 0.0;      // estimated radius (inverse wavenumber units)
    double fit_residual = 0.0;
    bool enough_shells = false;
    double Y3 = 0.0;         // weighted sum Y with exponent 6, when requested
};

// Least-squares fit of log shell-max|theta_hat| against |k|; delta = -slope
// when negative, else 0. Shells below 1e-14 * max|theta_hat| are excluded;
// fewer than 3 usable shells returns delta 0 with enough_shells=false.
AnalyticityEstimate analyticity_radius(const SpectralField& f);

// Same, and additionally Y(t) = sum |k|^6 |theta_hat(k) e^{(1/2)|k|^{2a} t}|^2
// for the given run time (log-domain accumulation).
AnalyticityEstimate analyticity_radius(const SpectralField& f, const ModelParams& params,
                                       double time);

// Log-log slope of the named column over samples with t in [t_lo, t_hi].
// Throws when fewer than 2 samples fall inside.
double log_log_slope(const RunRecord& record, const std::string& column, double t_lo,
                     double t_hi);

// Slope of ||theta(t)||_{s+n alpha} vs t (log-log) over the window: the
// smoothing-rate fit; requires the matching hs column in the record.
double smoothing_rate_fit(const RunRecord& record, double s, int n, const ModelParams& params,
                          double t_lo, double t_hi);

}  // namespace gqg
