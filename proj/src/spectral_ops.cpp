#include "gqg/spectral_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "gqg/reduce.hpp"

namespace gqg {

SpectralField apply_fractional_laplacian(const SpectralField& f, double power) {
    const int N = f.grid().N;
    if (power < 0.0 && std::abs(f.at(0, 0)) != 0.0)
        throw std::invalid_argument(
            "apply_fractional_laplacian: negative power needs a mean-free field");

    SpectralField out(f.grid());
#pragma omp parallel for schedule(static)
    for (int k1 = -N; k1 <= N; ++k1) {
        for (int k2 = -N; k2 <= N; ++k2) {
            if (k1 == 0 && k2 == 0) {
                out.at(0, 0) = (power == 0.0) ? f.at(0, 0) : cplx{0.0, 0.0};
                continue;
            }
            double kk = std::sqrt(double(k1) * k1 + double(k2) * k2);
            out.at(k1, k2) = std::pow(kk, power) * f.at(k1, k2);
        }
    }
    return out;
}

std::pair<SpectralField, SpectralField> velocity_from_theta(const SpectralField& theta,
                                                            const ModelParams& params) {
    const int N = theta.grid().N;
    SpectralField u1(theta.grid()), u2(theta.grid());
#pragma omp parallel for schedule(static)
    for (int k1 = -N; k1 <= N; ++k1) {
        for (int k2 = -N; k2 <= N; ++k2) {
            if (k1 == 0 && k2 == 0) continue;  // u_hat(0) = 0 by fiat
            double kk = std::sqrt(double(k1) * k1 + double(k2) * k2);
            cplx factor = cplx{0.0, std::pow(kk, -2.0 * params.beta)} * theta.at(k1, k2);
            u1.at(k1, k2) = -double(k2) * factor;
            u2.at(k1, k2) = double(k1) * factor;
        }
    }
    return {std::move(u1), std::move(u2)};
}

std::pair<SpectralField, SpectralField> gradient(const SpectralField& f) {
    const int N = f.grid().N;
    SpectralField g1(f.grid()), g2(f.grid());
#pragma omp parallel for schedule(static)
    for (int k1 = -N; k1 <= N; ++k1) {
        for (int k2 = -N; k2 <= N; ++k2) {
            cplx ic = cplx{0.0, 1.0} * f.at(k1, k2);
            g1.at(k1, k2) = double(k1) * ic;
            g2.at(k1, k2) = double(k2) * ic;
        }
    }
    return {std::move(g1), std::move(g2)};
}

double l2_norm(const SpectralField& f) {
    std::vector<double> terms(f.coeffs().size());
    for (size_t i = 0; i < terms.size(); ++i) terms[i] = std::norm(f.coeffs()[i]);
    return std::sqrt(pairwise_sum(terms));
}

}  // namespace gqg
