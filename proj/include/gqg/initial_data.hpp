#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gqg/field.hpp"

namespace gqg {

// Seeded initial-data generators; every output is Hermitian-symmetric and
// (except single_mode with k=0, which is rejected) mean-free.

// amplitude * cos(k.x): coefficients amplitude/2 at +-k.
SpectralField single_mode(const Grid& g, int k1, int k2, double amplitude = 1.0);

struct ModeAmp {
    int k1, k2;
    double amplitude;  // cosine amplitude per mode
};

SpectralField multi_mode(const Grid& g, const std::vector<ModeAmp>& modes);

// |theta_hat(k)| = |k|^{-slope} with seeded uniform random phases, modes
// 1 <= |k| <= band only. theta0 lands in H^s exactly for s < slope - 1.
SpectralField random_band_limited(const Grid& g, double slope, int band, std::uint64_t seed);

// Snapshot file (physical or .spec), band-limited onto g.
SpectralField from_file(const Grid& g, const std::string& path);

}  // namespace gqg
