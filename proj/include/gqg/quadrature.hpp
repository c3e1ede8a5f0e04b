#pragma once

#include <functional>

namespace gqg {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
};

// Adaptive Simpson on [a,b] with a running error estimate (|S2-S1|/15 summed
// over accepted intervals).
QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                            double rel_tol = 1e-11, double abs_tol = 1e-300, int max_depth = 26);

// Adaptive Simpson of f over [a,b] in the substituted variable u = log(eta):
// int_a^b f = int_{log a}^{log b} f(e^u) e^u du. Regularizes power-law
// endpoints; a must be positive.
QuadResult adaptive_simpson_log(const std::function<double(double)>& f, double a, double b,
                                double rel_tol = 1e-11);

// Composite trapezoid on log-spaced nodes; the independent reference used by
// the quadrature oracle tests.
double trapezoid_log(const std::function<double(double)>& f, double a, double b, int n_points);

}  // namespace gqg
