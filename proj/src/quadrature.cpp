#include "gqg/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "gqg/reduce.hpp"

namespace gqg {

double pairwise_sum(std::span<const double> terms) {
    const size_t n = terms.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double t : terms) s += t;
        return s;
    }
    const size_t half = n / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

namespace {

struct Adaptive {
    const std::function<double(double)>& f;
    double tol;  // absolute, per whole interval
    int max_depth;
    double err = 0.0;

    double simpson(double a, double b, double fa, double fm, double fb) const {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole,
                   double tol_here, int depth) {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        double flm = f(lm), frm = f(rm);
        double left = simpson(a, m, fa, flm, fm);
        double right = simpson(m, b, fm, frm, fb);
        double delta = left + right - whole;
        if (depth >= max_depth || std::abs(delta) <= 15.0 * tol_here) {
            err += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, tol_here / 2, depth + 1) +
               recurse(m, b, fm, frm, fb, right, tol_here / 2, depth + 1);
    }
};

}  // namespace

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                            double rel_tol, double abs_tol, int max_depth) {
    if (!(b > a)) return {0.0, 0.0};
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    Adaptive ad{f, 0.0, max_depth, 0.0};
    double whole = ad.simpson(a, b, fa, fm, fb);
    // tolerance scale: when the signed estimate cancels toward zero, fall back
    // to the magnitude scale so the recursion terminates (the reported error
    // stays honest either way)
    double scale = (b - a) * std::max({std::abs(fa), std::abs(fm), std::abs(fb)});
    double tol = std::max(abs_tol, rel_tol * std::max(std::abs(whole), scale));
    ad.tol = tol;
    double v = ad.recurse(a, b, fa, fm, fb, whole, tol, 0);
    return {v, ad.err};
}

QuadResult adaptive_simpson_log(const std::function<double(double)>& f, double a, double b,
                                double rel_tol) {
    if (!(b > a)) return {0.0, 0.0};
    if (!(a > 0.0)) throw std::invalid_argument("adaptive_simpson_log: a must be positive");
    auto g = [&f](double u) {
        double eta = std::exp(u);
        return f(eta) * eta;
    };
    return adaptive_simpson(g, std::log(a), std::log(b), rel_tol);
}

double trapezoid_log(const std::function<double(double)>& f, double a, double b, int n_points) {
    if (!(b > a)) return 0.0;
    if (!(a > 0.0) || n_points < 2) throw std::invalid_argument("trapezoid_log");
    const double ua = std::log(a), ub = std::log(b);
    const double h = (ub - ua) / (n_points - 1);
    std::vector<double> terms(n_points);
    for (int i = 0; i < n_points; ++i) {
        double eta = std::exp(ua + h * i);
        double w = (i == 0 || i == n_points - 1) ? 0.5 : 1.0;
        terms[i] = w * f(eta) * eta;
    }
    return h * pairwise_sum(terms);
}

}  // namespace gqg
