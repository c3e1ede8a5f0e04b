#pragma once

#include <stdexcept>
#include <string>

#include "gqg/grid.hpp"

namespace gqg {

struct InvalidMoc : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Piecewise modulus of continuity:
//   omega(xi) = xi - xi^r                      on [0, delta]
//   omega'(xi) = gamma / xi^{2a+2b-1}          beyond (subcritical)
//   omega'(xi) = gamma delta^t / xi^t          beyond (supercritical,
//                                              t = tail_exponent)
// with the lambda-rescaling omega_lambda(xi) = lambda^{2(a+b-1)} omega(lambda xi).
// Construction validates continuity, monotonicity, concavity (derivative drop
// at delta) and the regime-specific parameter windows; r < 2 makes
// omega''(0+) = -infinity.
struct Moc {
    Regime regime = Regime::Subcritical;
    double alpha = 0.0, beta = 0.0;  // exponents the family was built for
    double r = 0.0;                  // near-origin exponent, in (1,2)
    double tail_exponent = 0.0;      // subcritical: 2a+2b-1; supercritical: free
    double delta = 0.0;
    double gamma = 0.0;
    double lambda = 1.0;

    void validate() const;
};

Moc make_subcritical_moc(const ModelParams& params, double r, double delta, double gamma);
Moc make_supercritical_moc(const ModelParams& params, double r, double tail_exponent,
                           double delta, double gamma);

// omega_lambda and its derivative (left value at the breakpoint)
double omega(const Moc& m, double xi);
double omega_prime(const Moc& m, double xi);

// omega with lambda = 1 regardless of the stored scaling (certification works
// on the base family)
double omega_base(const Moc& m, double xi);
double omega_base_prime(const Moc& m, double xi);

// omega(xi+2 eta) + omega(xi-2 eta) - 2 omega(xi) for eta in [0, xi/2],
// lambda = 1. Computed with the linear/constant parts cancelled analytically
// (expm1/log1p) when all three points fall in one smooth piece; the naive
// evaluation loses everything to round-off for eta << xi.
double omega_base_second_difference(const Moc& m, double xi, double eta);

// lambda^{2a+2b-1} = 2 grad_sup, per the data-rescaling rule
Moc rescale_for_data(const Moc& m, double grad_sup);

}  // namespace gqg
