#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gqg {

// Square truncation |k1|,|k2| <= N on [0,2pi)^2 with basis e^{ik.x},
// sampled on an M x M uniform grid. M >= 2N+2 so that grid samples
// determine the retained modes without aliasing.
struct Grid {
    int N = 0;
    int M = 0;

    Grid() = default;
    Grid(int n, int m) : N(n), M(m) {
        if (n < 1) throw std::invalid_argument("Grid: N must be positive");
        if (m < 2 * n + 2)
            throw std::invalid_argument("Grid: M must be >= 2N+2 (got N=" +
                                        std::to_string(n) + ", M=" + std::to_string(m) + ")");
    }
    static Grid with_default_m(int n) { return Grid(n, 2 * n + 2); }

    int modes_per_axis() const { return 2 * N + 1; }
    int num_modes() const { return modes_per_axis() * modes_per_axis(); }
    int num_points() const { return M * M; }

    // lexicographic (k1,k2) index over the square lattice
    int mode_index(int k1, int k2) const { return (k1 + N) * modes_per_axis() + (k2 + N); }
    bool in_lattice(int k1, int k2) const {
        return k1 >= -N && k1 <= N && k2 >= -N && k2 <= N;
    }

    double dx() const { return 2.0 * M_PI / M; }

    bool operator==(const Grid&) const = default;
};

// The projection P^N: true exactly on the square lattice.
inline bool dealias_mask(const Grid& g, int k1, int k2) { return g.in_lattice(k1, k2); }

enum class Regime { Supercritical, Critical, Subcritical };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Supercritical: return "supercritical";
        case Regime::Critical: return "critical";
        default: return "subcritical";
    }
}

// alpha in (0,1), beta in (1/2,1), 1/2 < alpha+beta < 3/2, nu > 0.
struct ModelParams {
    double alpha = 0.75;
    double beta = 0.75;
    double nu = 1.0;

    ModelParams() = default;
    ModelParams(double a, double b, double n = 1.0) : alpha(a), beta(b), nu(n) { validate(); }

    void validate() const {
        if (!(alpha > 0.0 && alpha < 1.0))
            throw std::invalid_argument("ModelParams: alpha must be in (0,1)");
        if (!(beta > 0.5 && beta < 1.0))
            throw std::invalid_argument("ModelParams: beta must be in (1/2,1)");
        double ab = alpha + beta;
        // closed at the top: alpha = beta = 3/4 sits exactly on 3/2 and the
        // subcritical construction still goes through there
        if (!(ab > 0.5 && ab <= 1.5))
            throw std::invalid_argument("ModelParams: alpha+beta must be in (1/2,3/2]");
        if (!(nu > 0.0)) throw std::invalid_argument("ModelParams: nu must be positive");
    }

    Regime regime() const {
        double ab = alpha + beta;
        if (ab < 1.0) return Regime::Supercritical;
        if (ab > 1.0) return Regime::Subcritical;
        return Regime::Critical;
    }
};

}  // namespace gqg
