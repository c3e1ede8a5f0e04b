#include "gqg/moc.hpp"

#include <cmath>

namespace gqg {
namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidMoc("Moc: " + what);
}

}  // namespace

void Moc::validate() const {
    require(delta > 0.0, "delta must be positive");
    require(gamma > 0.0, "gamma must be positive");
    require(lambda > 0.0, "lambda must be positive");
    require(r > 1.0 && r < 2.0, "r must be in (1,2)");
    const double left_slope = 1.0 - r * std::pow(delta, r - 1.0);
    require(left_slope > 0.0, "omega'(delta-) must stay positive (delta too large)");
    if (regime == Regime::Subcritical) {
        const double ab = alpha + beta;
        require(ab > 1.0 && ab <= 1.5, "subcritical family needs 1 < alpha+beta <= 3/2");
        require(alpha > 0.5 && alpha < 1.0 && beta > 0.5 && beta < 1.0,
                "subcritical family needs alpha, beta in (1/2,1)");
        require(std::abs(tail_exponent - (2 * alpha + 2 * beta - 1)) < 1e-14,
                "subcritical tail exponent is fixed to 2a+2b-1");
        // derivative drop at delta
        require(gamma * std::pow(delta, -(2 * alpha + 2 * beta - 1)) < left_slope,
                "gamma too large: omega'(delta+) must drop below omega'(delta-)");
    } else if (regime == Regime::Supercritical) {
        const double ab = alpha + beta;
        require(ab > 0.5 && ab < 1.0, "supercritical family needs 1/2 < alpha+beta < 1");
        require(tail_exponent > ab && tail_exponent < 1.0,
                "tail exponent must be in (alpha+beta, 1)");
        require(r < 1.0 + 2.0 * alpha, "r must be below 1+2 alpha");
        require(gamma <= (1.0 - tail_exponent) / 2.0, "gamma must be <= (1-t)/2");
        require(std::pow(delta, r - 1.0) <= 0.5, "delta too large: need delta^{r-1} <= 1/2");
        // derivative drop: omega'(delta+) = gamma
        require(gamma < left_slope, "gamma too large: derivative must drop at delta");
    } else {
        require(false, "critical regime has no explicit family here");
    }
}

Moc make_subcritical_moc(const ModelParams& params, double r, double delta, double gamma) {
    Moc m;
    m.regime = Regime::Subcritical;
    m.alpha = params.alpha;
    m.beta = params.beta;
    m.r = r;
    m.tail_exponent = 2 * params.alpha + 2 * params.beta - 1;
    m.delta = delta;
    m.gamma = gamma;
    m.validate();
    return m;
}

Moc make_supercritical_moc(const ModelParams& params, double r, double tail_exponent,
                           double delta, double gamma) {
    Moc m;
    m.regime = Regime::Supercritical;
    m.alpha = params.alpha;
    m.beta = params.beta;
    m.r = r;
    m.tail_exponent = tail_exponent;
    m.delta = delta;
    m.gamma = gamma;
    m.validate();
    return m;
}

double omega_base(const Moc& m, double xi) {
    if (xi < 0.0) throw std::invalid_argument("omega: xi must be nonnegative");
    if (xi <= m.delta) return xi - std::pow(xi, m.r);
    const double wd = m.delta - std::pow(m.delta, m.r);
    if (m.regime == Regime::Subcritical) {
        // integral of gamma eta^{-(2a+2b-1)}; exponent e = 2-2a-2b in (-1,0)
        const double e = 2.0 - 2.0 * m.alpha - 2.0 * m.beta;
        return wd + m.gamma * (std::pow(xi, e) - std::pow(m.delta, e)) / e;
    }
    const double t = m.tail_exponent;
    return wd + m.gamma * std::pow(m.delta, t) *
                    (std::pow(xi, 1.0 - t) - std::pow(m.delta, 1.0 - t)) / (1.0 - t);
}

double omega_base_prime(const Moc& m, double xi) {
    if (xi < 0.0) throw std::invalid_argument("omega_prime: xi must be nonnegative");
    if (xi <= m.delta) return 1.0 - m.r * std::pow(xi, m.r - 1.0);
    if (m.regime == Regime::Subcritical)
        return m.gamma * std::pow(xi, -(2.0 * m.alpha + 2.0 * m.beta - 1.0));
    return m.gamma * std::pow(m.delta / xi, m.tail_exponent);
}

namespace {

// x^p (1+u)^p + x^p (1-u)^p - 2 x^p, |u| <= 1, without the cancellation of
// the naive sum (the O(u) terms cancel inside expm1 outputs of size O(u))
double powers_second_difference(double x, double p, double u) {
    const double ep = std::expm1(p * std::log1p(u));
    const double em = std::expm1(p * std::log1p(-u));
    return std::pow(x, p) * (ep + em);
}

}  // namespace

double omega_base_second_difference(const Moc& m, double xi, double eta) {
    if (!(eta >= 0.0) || !(eta <= 0.5 * xi + 1e-12 * xi))
        throw std::invalid_argument("omega_second_difference: need 0 <= eta <= xi/2");
    eta = std::min(eta, 0.5 * xi);
    const double u = 2.0 * eta / xi;
    if (xi + 2.0 * eta <= m.delta)  // all three points in the head piece
        return -powers_second_difference(xi, m.r, u);
    if (xi - 2.0 * eta >= m.delta) {  // all three in the tail piece
        if (m.regime == Regime::Subcritical) {
            const double e = 2.0 - 2.0 * m.alpha - 2.0 * m.beta;
            return (m.gamma / e) * powers_second_difference(xi, e, u);
        }
        const double e = 1.0 - m.tail_exponent;
        const double B = m.gamma * std::pow(m.delta, m.tail_exponent) / e;
        return B * powers_second_difference(xi, e, u);
    }
    // straddling the breakpoint: the kink contribution dominates round-off
    return omega_base(m, xi + 2.0 * eta) + omega_base(m, xi - 2.0 * eta) -
           2.0 * omega_base(m, xi);
}

double omega(const Moc& m, double xi) {
    if (m.lambda == 1.0) return omega_base(m, xi);
    const double amp = std::pow(m.lambda, 2.0 * (m.alpha + m.beta - 1.0));
    return amp * omega_base(m, m.lambda * xi);
}

double omega_prime(const Moc& m, double xi) {
    if (m.lambda == 1.0) return omega_base_prime(m, xi);
    const double amp = std::pow(m.lambda, 2.0 * (m.alpha + m.beta - 1.0) + 1.0);
    return amp * omega_base_prime(m, m.lambda * xi);
}

Moc rescale_for_data(const Moc& m, double grad_sup) {
    if (!(grad_sup > 0.0)) throw std::invalid_argument("rescale_for_data: grad_sup must be > 0");
    Moc out = m;
    out.lambda = std::pow(2.0 * grad_sup, 1.0 / (2.0 * m.alpha + 2.0 * m.beta - 1.0));
    return out;
}

}  // namespace gqg
