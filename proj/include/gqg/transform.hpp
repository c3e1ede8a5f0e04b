#pragma once

#include "gqg/field.hpp"

namespace gqg {

// Convention: theta(x) = sum_k theta_hat(k) e^{i k.x}, so the forward
// transform is the DFT divided by M^2 and Parseval reads
// sum_k |theta_hat(k)|^2 = (1/M^2) sum_x theta(x)^2.

// Analyze grid samples into lattice coefficients (band-limits to the grid's N;
// Hermitian symmetry is enforced exactly on the output).
SpectralField to_spectral(const PhysicalField& f);

// Same, but targeting a different truncation N (requires f's M >= 2N+2).
SpectralField to_spectral_as(const PhysicalField& f, int n_target);

// Synthesize samples on the field's own grid. Throws if the imaginary residue
// exceeds 1e-12 of the field magnitude (corrupted symmetry).
PhysicalField to_physical(const SpectralField& f);

// Synthesize on an arbitrary grid of m_points >= 2N+2 per axis (used for
// refined sup-norm evaluation and padded products).
PhysicalField to_physical_on(const SpectralField& f, int m_points);

}  // namespace gqg
