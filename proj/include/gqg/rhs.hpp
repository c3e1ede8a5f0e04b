#pragma once

#include "gqg/field.hpp"

namespace gqg {

// Two routes to the truncated nonlinear term, kept as mutual oracles:
// DirectConvolution is the literal lattice double sum (O(N^4)), Pseudospectral
// the FFT product path on an internally padded grid. They agree to 1e-10.
enum class EvalMode { DirectConvolution, Pseudospectral };

// DirectConvolution kernel: plain |m|^{-2 beta} weight, or the antisymmetrized
// (1/2)(|m|^{-2 beta} - |l|^{-2 beta}) form. Algebraically equal.
enum class KernelForm { Plain, Antisymmetrized };

struct NonlinearEvaluator {
    EvalMode mode = EvalMode::Pseudospectral;
    KernelForm form = KernelForm::Plain;
    bool parallel = true;
};

// B_hat(k) = -sum_{l+m=k, l,m nonzero lattice modes} <l,mperp> |m|^{-2 beta}
//            theta_hat(m) theta_hat(l),  <l,mperp> = l1 m2 - l2 m1.
// Equals -P^N(u . grad theta) in Fourier space. Output mode 0 is exactly 0.
SpectralField nonlinear_term(const SpectralField& theta, const ModelParams& params,
                             const NonlinearEvaluator& evaluator);

// rhs(k) = B_hat(k) - nu |k|^{2 alpha} theta_hat(k); mean-mode derivative 0.
SpectralField rhs(const SpectralField& theta, const ModelParams& params,
                  const NonlinearEvaluator& evaluator);

// Symmetrized triple sum
//   S = sum_{l+m+k=0} <l,mperp> (1/|m|^{2b} - 1/|l|^{2b}) |k|^{2s}
//       theta_hat(k) theta_hat(l) theta_hat(m),
// zero modes excluded. Real up to round-off (checked); relates to the energy
// pairing by S = -2 Re sum_k |k|^{2s} conj(theta_hat(k)) B_hat(k).
double triple_sum_S(const SpectralField& theta, double s, const ModelParams& params);

namespace kernels {
// Serial reference and OpenMP implementations of the direct lattice sum;
// identical output bit for bit (independent writes per output mode).
SpectralField direct_convolution_serial(const SpectralField& theta, const ModelParams& params,
                                        KernelForm form);
SpectralField direct_convolution_parallel(const SpectralField& theta, const ModelParams& params,
                                          KernelForm form);
}  // namespace kernels

}  // namespace gqg
