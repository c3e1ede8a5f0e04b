#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gqg/initial_data.hpp"
#include "gqg/spectral_ops.hpp"
#include "gqg/transform.hpp"
#include "oracles.hpp"

using namespace gqg;

TEST_CASE("grid rejects undersampled M and maps mode indices bijectively") {
    CHECK_THROWS_AS(Grid(8, 17), std::invalid_argument);
    CHECK_THROWS_AS(Grid(0, 10), std::invalid_argument);
    Grid g(3, 8);
    std::vector<int> seen(g.num_modes(), 0);
    for (int k1 = -3; k1 <= 3; ++k1)
        for (int k2 = -3; k2 <= 3; ++k2) seen[g.mode_index(k1, k2)]++;
    for (int c : seen) CHECK(c == 1);
}

TEST_CASE("constant field transforms to a pure mean mode") {
    Grid g(4, 10);
    PhysicalField f(g);
    for (auto& v : f.values()) v = 2.5;
    SpectralField s = to_spectral(f);
    CHECK(s.at(0, 0).real() == doctest::Approx(2.5).epsilon(1e-14));
    for (int k1 = -4; k1 <= 4; ++k1)
        for (int k2 = -4; k2 <= 4; ++k2)
            if (k1 || k2) CHECK(std::abs(s.at(k1, k2)) < 1e-14);
}

TEST_CASE("cos(x1) analyzes to half-amplitude coefficients at (+-1,0)") {
    Grid g(4, 10);
    PhysicalField f(g);
    for (int i = 0; i < g.M; ++i)
        for (int j = 0; j < g.M; ++j) f.at(i, j) = std::cos(2.0 * M_PI * i / g.M);
    SpectralField s = to_spectral(f);
    CHECK(s.at(1, 0).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(s.at(-1, 0).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::abs(s.at(0, 1)) < 1e-14);
}

TEST_CASE("single mode (1,1) with conjugate synthesizes cos(x1+x2)") {
    Grid g(4, 10);
    SpectralField s(g);
    s.at(1, 1) = cplx{0.5, 0.0};
    s.at(-1, -1) = cplx{0.5, 0.0};
    PhysicalField f = to_physical(s);
    for (int i = 0; i < g.M; ++i)
        for (int j = 0; j < g.M; ++j) {
            double x = 2.0 * M_PI * (i + j) / g.M;
            CHECK(f.at(i, j) == doctest::Approx(std::cos(x)).epsilon(1e-13));
        }
}

TEST_CASE("round trip on random band-limited data matches the direct DFT oracle") {
    Grid g(6, 14);
    SpectralField s = random_band_limited(g, 1.0, 6, 17);
    PhysicalField f = to_physical(s);
    // synthesis against literal mode sum
    for (int i : {0, 3, 7, 13})
        for (int j : {1, 5, 11})
            CHECK(f.at(i, j) == doctest::Approx(oracle::synth_point(s, i, j)).epsilon(1e-12));
    // analysis round trip
    SpectralField back = to_spectral(f);
    CHECK(oracle::max_coeff_diff(s, back) < 1e-13 * s.max_abs() / s.max_abs() + 1e-13);
    // analysis against literal DFT
    for (int k1 : {-6, -2, 0, 5})
        for (int k2 : {-4, 0, 6})
            CHECK(std::abs(back.at(k1, k2) - oracle::dft_mode(f, k1, k2)) < 1e-13);
}

TEST_CASE("to_physical rejects corrupted symmetry") {
    Grid g(3, 8);
    SpectralField s(g);
    s.at(1, 0) = cplx{1.0, 0.0};  // conjugate partner missing
    CHECK_THROWS_AS(to_physical(s), std::runtime_error);
}

TEST_CASE("hermitian projection is idempotent and kills the defect") {
    Grid g(5, 12);
    SpectralField s(g);
    for (auto& c : s.coeffs()) c = cplx{0.3, -0.7};
    CHECK(s.hermitian_defect() > 0.1);
    s.enforce_hermitian();
    CHECK(s.is_hermitian());
    SpectralField t = s;
    t.enforce_hermitian();
    CHECK(oracle::max_coeff_diff(s, t) == 0.0);
}

TEST_CASE("fractional laplacian: identity, single-mode multiplier, semigroup") {
    Grid g(6, 14);
    SpectralField s = random_band_limited(g, 1.0, 6, 23);

    SpectralField id = apply_fractional_laplacian(s, 0.0);
    CHECK(oracle::max_coeff_diff(s, id) == 0.0);

    SpectralField one(g);
    one.at(3, 4) = cplx{0.5, 0.0};
    one.at(-3, -4) = cplx{0.5, 0.0};
    const double a = 0.75;
    SpectralField lap = apply_fractional_laplacian(one, 2 * a);
    CHECK(lap.at(3, 4).real() == doctest::Approx(0.5 * std::pow(5.0, 2 * a)).epsilon(1e-14));

    SpectralField ab = apply_fractional_laplacian(apply_fractional_laplacian(s, 0.6), 0.9);
    SpectralField apb = apply_fractional_laplacian(s, 1.5);
    CHECK(oracle::max_coeff_diff(ab, apb) < 1e-13 * apb.max_abs());
}

TEST_CASE("negative powers require a mean-free field") {
    Grid g(3, 8);
    SpectralField s(g);
    s.at(0, 0) = cplx{1.0, 0.0};
    CHECK_THROWS_AS(apply_fractional_laplacian(s, -1.0), std::invalid_argument);
    s.at(0, 0) = cplx{0.0, 0.0};
    s.at(1, 0) = cplx{0.5, 0.0};
    s.at(-1, 0) = cplx{0.5, 0.0};
    CHECK_NOTHROW(apply_fractional_laplacian(s, -1.0));
}

TEST_CASE("velocity map: unit mode, beta=1/2 Riesz form, exact divergence freeness") {
    Grid g(6, 14);
    ModelParams p(0.75, 0.75);

    SpectralField s(g);
    s.at(1, 0) = cplx{1.0, 0.0};
    s.at(-1, 0) = cplx{1.0, 0.0};
    auto [u1, u2] = velocity_from_theta(s, p);
    // u_hat(k) = i k_perp |k|^{-2 beta} theta_hat: at k=(1,0), k_perp=(0,1)
    CHECK(std::abs(u1.at(1, 0)) < 1e-15);
    CHECK(u2.at(1, 0) == cplx{0.0, 1.0});

    ModelParams riesz(0.75, 0.5 + 1e-13);
    SpectralField r = random_band_limited(g, 1.0, 6, 31);
    auto [v1, v2] = velocity_from_theta(r, riesz);
    for (int k1 : {-5, 1, 4})
        for (int k2 : {-3, 2}) {
            double kk = std::hypot(double(k1), double(k2));
            cplx expect1 = cplx{0, -k2 / kk} * r.at(k1, k2);
            cplx expect2 = cplx{0, k1 / kk} * r.at(k1, k2);
            CHECK(std::abs(v1.at(k1, k2) - expect1) < 1e-10);
            CHECK(std::abs(v2.at(k1, k2) - expect2) < 1e-10);
        }

    auto [w1, w2] = velocity_from_theta(r, p);
    for (int k1 = -6; k1 <= 6; ++k1)
        for (int k2 = -6; k2 <= 6; ++k2) {
            cplx div = double(k1) * w1.at(k1, k2) + double(k2) * w2.at(k1, k2);
            // k . k_perp = 0 algebraically; the two terms are independently
            // rounded products, so cancellation is exact only to the ulp
            CHECK(std::abs(div) <= 1e-15 * (std::abs(k1) + std::abs(k2)) * r.max_abs());
        }
}

TEST_CASE("parseval ties coefficient mass to the grid average") {
    Grid g(5, 12);
    SpectralField s = random_band_limited(g, 1.2, 5, 41);
    PhysicalField f = to_physical(s);
    double lhs = 0.0;
    for (const auto& c : s.coeffs()) lhs += std::norm(c);
    double rhs = 0.0;
    for (double v : f.values()) rhs += v * v;
    rhs /= f.values().size();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("dealias mask is the square lattice predicate") {
    Grid g(4, 10);
    CHECK(dealias_mask(g, 4, -4));
    CHECK(!dealias_mask(g, 5, 0));
    CHECK(!dealias_mask(g, 0, -5));
}
