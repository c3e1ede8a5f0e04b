#pragma once

// Independent slow references used by the test suites only.

#include <cmath>
#include <complex>
#include <vector>

#include "gqg/field.hpp"

namespace oracle {

// forward transform by literal summation: theta_hat(k) = (1/M^2) sum_x theta(x) e^{-ik.x}
inline gqg::cplx dft_mode(const gqg::PhysicalField& f, int k1, int k2) {
    const int M = f.grid().M;
    gqg::cplx acc{0.0, 0.0};
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) {
            double phase = -2.0 * M_PI * (double(k1) * i + double(k2) * j) / M;
            acc += f.at(i, j) * gqg::cplx{std::cos(phase), std::sin(phase)};
        }
    return acc / double(M * M);
}

// synthesis by literal summation at grid point (i,j)
inline double synth_point(const gqg::SpectralField& f, int i, int j) {
    const int N = f.grid().N, M = f.grid().M;
    gqg::cplx acc{0.0, 0.0};
    for (int k1 = -N; k1 <= N; ++k1)
        for (int k2 = -N; k2 <= N; ++k2) {
            double phase = 2.0 * M_PI * (double(k1) * i + double(k2) * j) / M;
            acc += f.at(k1, k2) * gqg::cplx{std::cos(phase), std::sin(phase)};
        }
    return acc.real();
}

inline double max_coeff_diff(const gqg::SpectralField& a, const gqg::SpectralField& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        worst = std::max(worst, std::abs(a.coeffs()[i] - b.coeffs()[i]));
    return worst;
}

inline double coeff_l2(const gqg::SpectralField& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs()) s += std::norm(c);
    return std::sqrt(s);
}

}  // namespace oracle
