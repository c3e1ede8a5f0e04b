#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "gqg/grid.hpp"

namespace gqg {

using cplx = std::complex<double>;

// Fourier coefficients theta_hat(k) on the square lattice, Hermitian-symmetric
// (theta_hat(-k) = conj(theta_hat(k)), theta_hat(0) real).
class SpectralField {
  public:
    SpectralField() = default;
    explicit SpectralField(const Grid& g) : grid_(g), c_(g.num_modes(), cplx{0.0, 0.0}) {}

    const Grid& grid() const { return grid_; }
    cplx& at(int k1, int k2) { return c_[grid_.mode_index(k1, k2)]; }
    const cplx& at(int k1, int k2) const { return c_[grid_.mode_index(k1, k2)]; }
    std::vector<cplx>& coeffs() { return c_; }
    const std::vector<cplx>& coeffs() const { return c_; }

    // Project onto the Hermitian-symmetric subspace (exact mirroring).
    void enforce_hermitian() {
        const int N = grid_.N;
        for (int k1 = 0; k1 <= N; ++k1) {
            for (int k2 = -N; k2 <= N; ++k2) {
                if (k1 == 0 && k2 < 0) continue;
                if (k1 == 0 && k2 == 0) {
                    at(0, 0) = cplx{at(0, 0).real(), 0.0};
                    continue;
                }
                cplx v = 0.5 * (at(k1, k2) + std::conj(at(-k1, -k2)));
                at(k1, k2) = v;
                at(-k1, -k2) = std::conj(v);
            }
        }
    }

    double hermitian_defect() const {
        const int N = grid_.N;
        double worst = std::abs(at(0, 0).imag());
        for (int k1 = -N; k1 <= N; ++k1)
            for (int k2 = -N; k2 <= N; ++k2)
                worst = std::max(worst, std::abs(at(k1, k2) - std::conj(at(-k1, -k2))));
        return worst;
    }

    bool is_hermitian(double tol = 1e-12) const { return hermitian_defect() <= tol; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    bool finite() const {
        for (const auto& v : c_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

  private:
    Grid grid_;
    std::vector<cplx> c_;
};

// Real samples of theta on the M x M grid, x_ij = (2 pi i / M, 2 pi j / M).
class PhysicalField {
  public:
    PhysicalField() = default;
    explicit PhysicalField(const Grid& g) : grid_(g), v_(g.num_points(), 0.0) {}

    const Grid& grid() const { return grid_; }
    double& at(int i, int j) { return v_[i * grid_.M + j]; }
    double at(int i, int j) const { return v_[i * grid_.M + j]; }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

    bool finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

  private:
    Grid grid_;
    std::vector<double> v_;
};

}  // namespace gqg
