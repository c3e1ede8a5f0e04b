#include "gqg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gqg/reduce.hpp"
#include "gqg/spectral_ops.hpp"
#include "gqg/transform.hpp"

namespace gqg {
namespace {

// least-squares slope of y against x
std::pair<double, double> lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    double rss = 0;
    for (size_t i = 0; i < n; ++i) {
        double r = y[i] - slope * x[i] - intercept;
        rss += r * r;
    }
    return {slope, std::sqrt(rss / n)};
}

}  // namespace

double sobolev_norm(const SpectralField& f, double s, bool homogeneous) {
    const int N = f.grid().N;
    std::vector<double> terms;
    terms.reserve(f.coeffs().size());
    if (!homogeneous) terms.push_back(std::norm(f.at(0, 0)));
    for (int k1 = -N; k1 <= N; ++k1) {
        for (int k2 = -N; k2 <= N; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            double w = std::pow(double(k1) * k1 + double(k2) * k2, s);
            terms.push_back(w * std::norm(f.at(k1, k2)));
        }
    }
    return std::sqrt(pairwise_sum(terms));
}

std::pair<double, double> linf_and_grad(const SpectralField& f, int refine) {
    const int m = refine * f.grid().M;
    PhysicalField th = to_physical_on(f, m);
    double linf = th.max_abs();

    auto [g1s, g2s] = gradient(f);
    PhysicalField g1 = to_physical_on(g1s, m);
    PhysicalField g2 = to_physical_on(g2s, m);
    double gmax = 0.0;
    for (size_t i = 0; i < g1.values().size(); ++i)
        gmax = std::max(gmax, std::hypot(g1.values()[i], g2.values()[i]));
    return {linf, gmax};
}

AnalyticityEstimate analyticity_radius(const SpectralField& f) {
    const int N = f.grid().N;
    const double peak = f.max_abs();
    AnalyticityEstimate est;
    if (peak <= 0.0) return est;

    // shell maxima over |k| in [j, j+1); the fit uses the |k| of the argmax,
    // which keeps a pure e^{-a|k|} profile exactly linear
    const int jmax = static_cast<int>(std::floor(std::sqrt(2.0) * N));
    std::vector<double> best(jmax + 1, 0.0), best_k(jmax + 1, 0.0);
    for (int k1 = -N; k1 <= N; ++k1) {
        for (int k2 = -N; k2 <= N; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            double kk = std::sqrt(double(k1) * k1 + double(k2) * k2);
            int j = static_cast<int>(std::floor(kk));
            double a = std::abs(f.at(k1, k2));
            if (a > best[j]) {
                best[j] = a;
                best_k[j] = kk;
            }
        }
    }

    std::vector<double> xs, ys;
    const double floor_level = 1e-14 * peak;
    for (int j = 1; j <= jmax; ++j) {
        if (best[j] > floor_level) {
            xs.push_back(best_k[j]);
            ys.push_back(std::log(best[j]));
        }
    }
    if (xs.size() < 3) return est;  // enough_shells stays false
    est.enough_shells = true;
    auto [slope, resid] = lsq_slope(xs, ys);
    // discriminate exponential decay e^{-a|k|} from a power law |k|^{-p}:
    // whichever model fits the shell maxima better wins, and a power law
    // carries no analytic radius
    std::vector<double> lxs(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) lxs[i] = std::log(xs[i]);
    auto [pslope, presid] = lsq_slope(lxs, ys);
    (void)pslope;
    est.fit_residual = resid;
    est.delta = (slope < 0.0 && resid <= presid) ? -slope : 0.0;
    return est;
}

AnalyticityEstimate analyticity_radius(const SpectralField& f, const ModelParams& params,
                                       double time) {
    AnalyticityEstimate est = analyticity_radius(f);
    const int N = f.grid().N;
    // Y = sum |k|^6 exp(2 log|theta_hat| + |k|^{2a} t), accumulated around the
    // largest exponent to survive the growing weight
    std::vector<double> lg;
    lg.reserve(f.coeffs().size());
    double lmax = -HUGE_VAL;
    for (int k1 = -N; k1 <= N; ++k1) {
        for (int k2 = -N; k2 <= N; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            double a = std::abs(f.at(k1, k2));
            if (a <= 0.0) continue;
            double k2sum = double(k1) * k1 + double(k2) * k2;
            double l = 3.0 * std::log(k2sum) + 2.0 * std::log(a) +
                       std::pow(k2sum, params.alpha) * time;
            lg.push_back(l);
            lmax = std::max(lmax, l);
        }
    }
    if (lg.empty()) {
        est.Y3 = 0.0;
        return est;
    }
    std::vector<double> terms(lg.size());
    for (size_t i = 0; i < lg.size(); ++i) terms[i] = std::exp(lg[i] - lmax);
    est.Y3 = std::exp(lmax) * pairwise_sum(terms);
    return est;
}

double log_log_slope(const RunRecord& record, const std::string& column, double t_lo,
                     double t_hi) {
    std::vector<double> xs, ys;
    for (size_t i = 0; i < record.samples().size(); ++i) {
        double t = record.samples()[i].time;
        if (t < t_lo || t > t_hi || t <= 0.0) continue;
        double v = record.value(i, column);
        if (v <= 0.0) continue;
        xs.push_back(std::log(t));
        ys.push_back(std::log(v));
    }
    if (xs.size() < 2)
        throw std::invalid_argument("log_log_slope: not enough samples in window");
    return lsq_slope(xs, ys).first;
}

double smoothing_rate_fit(const RunRecord& record, double s, int n, const ModelParams& params,
                          double t_lo, double t_hi) {
    return log_log_slope(record, hs_column(s + n * params.alpha), t_lo, t_hi);
}

}  // namespace gqg
