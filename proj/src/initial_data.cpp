#include "gqg/initial_data.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gqg/field_io.hpp"
#include "gqg/transform.hpp"

namespace gqg {

SpectralField single_mode(const Grid& g, int k1, int k2, double amplitude) {
    if (k1 == 0 && k2 == 0) throw std::invalid_argument("single_mode: k must be nonzero");
    if (!g.in_lattice(k1, k2)) throw std::invalid_argument("single_mode: k outside lattice");
    SpectralField f(g);
    f.at(k1, k2) = cplx{amplitude / 2.0, 0.0};
    f.at(-k1, -k2) = cplx{amplitude / 2.0, 0.0};
    return f;
}

SpectralField multi_mode(const Grid& g, const std::vector<ModeAmp>& modes) {
    SpectralField f(g);
    for (const auto& m : modes) {
        if (m.k1 == 0 && m.k2 == 0) throw std::invalid_argument("multi_mode: k must be nonzero");
        if (!g.in_lattice(m.k1, m.k2))
            throw std::invalid_argument("multi_mode: k outside lattice");
        f.at(m.k1, m.k2) += cplx{m.amplitude / 2.0, 0.0};
        f.at(-m.k1, -m.k2) += cplx{m.amplitude / 2.0, 0.0};
    }
    return f;
}

namespace {

// per-mode stream: the phase of mode k depends only on (seed, k), so the same
// seed yields the same coefficients at every truncation N >= band
std::uint64_t mode_stream(std::uint64_t seed, int k1, int k2) {
    std::uint64_t z = seed ^ (std::uint64_t(std::uint32_t(k1)) << 32 | std::uint32_t(k2));
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SpectralField random_band_limited(const Grid& g, double slope, int band, std::uint64_t seed) {
    if (band < 1 || band > g.N) throw std::invalid_argument("random_band_limited: band exceeds grid");
    SpectralField f(g);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    // half-lattice sweep; the mirror mode is the conjugate
    for (int k1 = 0; k1 <= g.N; ++k1) {
        for (int k2 = (k1 == 0 ? 1 : -g.N); k2 <= g.N; ++k2) {
            const double kk = std::hypot(double(k1), double(k2));
            if (kk > band) continue;
            const double amp = std::pow(kk, -slope);
            std::mt19937_64 rng(mode_stream(seed, k1, k2));
            const double ph = phase(rng);
            cplx v = amp * cplx{std::cos(ph), std::sin(ph)};
            f.at(k1, k2) = v;
            f.at(-k1, -k2) = std::conj(v);
        }
    }
    return f;
}

SpectralField from_file(const Grid& g, const std::string& path) {
    if (is_spectral_path(path)) {
        SpectralSnapshot snap = read_spectral_snapshot(path);
        const SpectralField& src = snap.field;
        SpectralField f(g);
        const int n = std::min(g.N, src.grid().N);
        for (int k1 = -n; k1 <= n; ++k1)
            for (int k2 = -n; k2 <= n; ++k2) f.at(k1, k2) = src.at(k1, k2);
        f.enforce_hermitian();
        return f;
    }
    PhysicalSnapshot snap = read_physical_snapshot(path);
    return to_spectral_as(snap.field, g.N);
}

}  // namespace gqg
