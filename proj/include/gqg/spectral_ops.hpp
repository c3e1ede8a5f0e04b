#pragma once

#include <utility>

#include "gqg/field.hpp"

namespace gqg {

// Lambda^power: diagonal multiplier |k|^power. power > 0 annihilates the mean
// (|0|^p = 0); power == 0 is the identity; power < 0 requires a mean-free
// field (throws otherwise).
SpectralField apply_fractional_laplacian(const SpectralField& f, double power);

// u = Lambda^{1-2 beta} Rperp theta: u_hat(k) = i kperp |k|^{-2 beta} theta_hat(k),
// kperp = (-k2, k1), u_hat(0) = 0. Divergence-free mode by mode: k . u_hat(k) = 0.
std::pair<SpectralField, SpectralField> velocity_from_theta(const SpectralField& theta,
                                                            const ModelParams& params);

// (d/dx1, d/dx2) theta via i k multipliers.
std::pair<SpectralField, SpectralField> gradient(const SpectralField& f);

// sqrt(sum_k |theta_hat(k)|^2): the L2 norm in the declared normalization,
// fixed pairwise reduction.
double l2_norm(const SpectralField& f);

}  // namespace gqg
