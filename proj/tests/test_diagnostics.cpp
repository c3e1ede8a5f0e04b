#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gqg/diagnostics.hpp"
#include "gqg/initial_data.hpp"
#include "gqg/transform.hpp"
#include "oracles.hpp"

using namespace gqg;

TEST_CASE("sobolev norm on a single |k|=2 mode") {
    Grid g(4, 10);
    SpectralField s = single_mode(g, 2, 0, 1.0);  // coefficients 1/2 at +-(2,0)
    CHECK(sobolev_norm(s, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("s=0 norm equals the Parseval L2 norm") {
    Grid g(6, 14);
    SpectralField s = random_band_limited(g, 1.3, 6, 19);
    CHECK(sobolev_norm(s, 0.0) == doctest::Approx(oracle::coeff_l2(s)).epsilon(1e-13));
}

TEST_CASE("sobolev norms are monotone in s for mean-free fields") {
    Grid g(6, 14);
    for (int seed : {2, 7, 11}) {
        SpectralField s = random_band_limited(g, 1.1, 6, seed);
        double prev = sobolev_norm(s, 0.0);
        for (double ss : {0.5, 1.0, 1.75, 2.5}) {
            double cur = sobolev_norm(s, ss);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("sup norms: closed forms and a dense-grid oracle") {
    Grid g(6, 14);
    SpectralField c(g);
    c.at(0, 0) = cplx{-1.5, 0.0};
    auto [linf_c, grad_c] = linf_and_grad(c);
    CHECK(linf_c == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(grad_c == doctest::Approx(0.0));

    SpectralField s = single_mode(g, 1, 0);  // cos(x1)
    auto [linf_s, grad_s] = linf_and_grad(s);
    CHECK(linf_s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(grad_s == doctest::Approx(1.0).epsilon(1e-12));

    SpectralField r = random_band_limited(g, 1.5, 6, 29);
    auto [linf_r, grad_r] = linf_and_grad(r, 2);
    auto [linf_fine, grad_fine] = linf_and_grad(r, 16);
    CHECK(linf_r <= linf_fine * 1.0000001);
    CHECK(linf_fine <= linf_r * 1.05);  // refine-2 grid already close
    CHECK(grad_r <= grad_fine * 1.0000001);
    CHECK(grad_fine <= grad_r * 1.05);
}

TEST_CASE("analyticity radius recovers synthetic exponential profiles within 2%") {
    Grid g(32, 66);
    for (double a : {0.1, 0.5, 1.0, 2.0}) {
        SpectralField s(g);
        for (int k1 = -32; k1 <= 32; ++k1)
            for (int k2 = -32; k2 <= 32; ++k2) {
                if (!k1 && !k2) continue;
                double kk = std::hypot(double(k1), double(k2));
                s.at(k1, k2) = std::exp(-a * kk);
            }
        s.enforce_hermitian();
        AnalyticityEstimate est = analyticity_radius(s);
        REQUIRE(est.enough_shells);
        CHECK(est.delta == doctest::Approx(a).epsilon(0.02));
    }
}

TEST_CASE("polynomial spectra report no analytic radius") {
    Grid g(16, 34);
    SpectralField s(g);
    for (int k1 = -16; k1 <= 16; ++k1)
        for (int k2 = -16; k2 <= 16; ++k2) {
            if (!k1 && !k2) continue;
            double kk = std::hypot(double(k1), double(k2));
            s.at(k1, k2) = std::pow(kk, -2.0);
        }
    s.enforce_hermitian();
    AnalyticityEstimate est = analyticity_radius(s);
    REQUIRE(est.enough_shells);
    CHECK(est.delta == 0.0);  // power law loses the model comparison
}

TEST_CASE("too few usable shells is flagged") {
    Grid g(8, 18);
    SpectralField s = single_mode(g, 1, 0);
    AnalyticityEstimate est = analyticity_radius(s);
    CHECK(!est.enough_shells);
    CHECK(est.delta == 0.0);
}

TEST_CASE("log-log slope recovers a power law from a record") {
    RunRecord rec;
    for (double t : {0.01, 0.02, 0.05, 0.1, 0.3}) {
        std::map<std::string, double> v{{"q", 3.0 * std::pow(t, -0.75)}};
        rec.add_sample(t, v);
    }
    CHECK(log_log_slope(rec, "q", 0.01, 0.3) == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK_THROWS_AS(log_log_slope(rec, "q", 0.5, 0.9), std::invalid_argument);
}

TEST_CASE("smoothing fit reads the matching hs column") {
    ModelParams p(0.75, 0.75);
    const double s = 1.0;
    RunRecord rec;
    for (double t : {1e-4, 1e-3, 1e-2}) {
        std::map<std::string, double> v{{hs_column(s + p.alpha), 2.0 * std::pow(t, -0.5)}};
        rec.add_sample(t, v);
    }
    CHECK(smoothing_rate_fit(rec, s, 1, p, 1e-4, 1e-2) ==
          doctest::Approx(-0.5).epsilon(1e-12));
}
