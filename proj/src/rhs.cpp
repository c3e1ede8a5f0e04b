#include "gqg/rhs.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gqg/reduce.hpp"
#include "gqg/spectral_ops.hpp"
#include "gqg/transform.hpp"

namespace gqg {
namespace {

inline double inv_pow2beta(int k1, int k2, double beta) {
    return std::pow(double(k1) * k1 + double(k2) * k2, -beta);
}

// One output mode of the direct lattice sum.
cplx direct_mode(const SpectralField& theta, const ModelParams& params, KernelForm form, int q1,
                 int q2) {
    const int N = theta.grid().N;
    const double b = params.beta;
    cplx acc{0.0, 0.0};
    for (int l1 = -N; l1 <= N; ++l1) {
        for (int l2 = -N; l2 <= N; ++l2) {
            if (l1 == 0 && l2 == 0) continue;
            const int m1 = q1 - l1, m2 = q2 - l2;
            if (m1 < -N || m1 > N || m2 < -N || m2 > N) continue;
            if (m1 == 0 && m2 == 0) continue;
            const double cross = double(l1) * m2 - double(l2) * m1;  // <l, mperp>
            if (cross == 0.0) continue;
            double w;
            if (form == KernelForm::Plain) {
                w = inv_pow2beta(m1, m2, b);
            } else {
                w = 0.5 * (inv_pow2beta(m1, m2, b) - inv_pow2beta(l1, l2, b));
            }
            acc += cross * w * theta.at(m1, m2) * theta.at(l1, l2);
        }
    }
    return -acc;
}

SpectralField direct_convolution(const SpectralField& theta, const ModelParams& params,
                                 KernelForm form, bool parallel) {
    const int N = theta.grid().N;
    SpectralField out(theta.grid());
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (int q1 = -N; q1 <= N; ++q1)
        for (int q2 = -N; q2 <= N; ++q2)
            out.at(q1, q2) = (q1 == 0 && q2 == 0) ? cplx{0.0, 0.0}
                                                  : direct_mode(theta, params, form, q1, q2);
    out.enforce_hermitian();
    return out;
}

// P^N(u . grad theta) via physical products. The product of two band-N fields
// carries modes up to 2N per axis, so the working grid must exceed 3N to keep
// aliases out of the retained lattice; the field's own M >= 2N+2 only covers
// sampling, not quadratic products.
SpectralField pseudospectral(const SpectralField& theta, const ModelParams& params) {
    const Grid& g = theta.grid();
    if (g.M < 2 * g.N + 2)
        throw std::invalid_argument("nonlinear_term: grid too small for dealiased product");
    const int mp = std::max(g.M, 3 * g.N + 2);

    auto [u1s, u2s] = velocity_from_theta(theta, params);
    auto [t1s, t2s] = gradient(theta);
    PhysicalField u1 = to_physical_on(u1s, mp);
    PhysicalField u2 = to_physical_on(u2s, mp);
    PhysicalField t1 = to_physical_on(t1s, mp);
    PhysicalField t2 = to_physical_on(t2s, mp);

    PhysicalField prod(u1.grid());
    auto& pv = prod.values();
    for (size_t i = 0; i < pv.size(); ++i)
        pv[i] = u1.values()[i] * t1.values()[i] + u2.values()[i] * t2.values()[i];

    SpectralField conv = to_spectral_as(prod, g.N);  // dealias mask = lattice restriction
    SpectralField out(g);
    for (size_t i = 0; i < out.coeffs().size(); ++i) out.coeffs()[i] = -conv.coeffs()[i];
    out.at(0, 0) = cplx{0.0, 0.0};
    out.enforce_hermitian();
    return out;
}

}  // namespace

namespace kernels {
SpectralField direct_convolution_serial(const SpectralField& theta, const ModelParams& params,
                                        KernelForm form) {
    return direct_convolution(theta, params, form, false);
}
SpectralField direct_convolution_parallel(const SpectralField& theta, const ModelParams& params,
                                          KernelForm form) {
    return direct_convolution(theta, params, form, true);
}
}  // namespace kernels

SpectralField nonlinear_term(const SpectralField& theta, const ModelParams& params,
                             const NonlinearEvaluator& evaluator) {
    if (evaluator.mode == EvalMode::DirectConvolution)
        return direct_convolution(theta, params, evaluator.form, evaluator.parallel);
    return pseudospectral(theta, params);
}

SpectralField rhs(const SpectralField& theta, const ModelParams& params,
                  const NonlinearEvaluator& evaluator) {
    const int N = theta.grid().N;
    SpectralField out = nonlinear_term(theta, params, evaluator);
    for (int k1 = -N; k1 <= N; ++k1) {
        for (int k2 = -N; k2 <= N; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            double lam = std::pow(double(k1) * k1 + double(k2) * k2, params.alpha);
            out.at(k1, k2) -= params.nu * lam * theta.at(k1, k2);
        }
    }
    return out;
}

double triple_sum_S(const SpectralField& theta, double s, const ModelParams& params) {
    const int N = theta.grid().N;
    const double b = params.beta;
    std::vector<double> re_terms, im_terms;
    re_terms.reserve(theta.coeffs().size());
    im_terms.reserve(theta.coeffs().size());
    for (int l1 = -N; l1 <= N; ++l1) {
        for (int l2 = -N; l2 <= N; ++l2) {
            if (l1 == 0 && l2 == 0) continue;
            cplx row{0.0, 0.0};
            for (int m1 = -N; m1 <= N; ++m1) {
                for (int m2 = -N; m2 <= N; ++m2) {
                    if (m1 == 0 && m2 == 0) continue;
                    const int k1 = -l1 - m1, k2 = -l2 - m2;
                    if (k1 < -N || k1 > N || k2 < -N || k2 > N) continue;
                    if (k1 == 0 && k2 == 0) continue;  // <l,mperp> vanishes there anyway
                    const double cross = double(l1) * m2 - double(l2) * m1;
                    if (cross == 0.0) continue;
                    const double w = inv_pow2beta(m1, m2, b) - inv_pow2beta(l1, l2, b);
                    const double ks = std::pow(double(k1) * k1 + double(k2) * k2, s);
                    row += cross * w * ks * theta.at(k1, k2) * theta.at(l1, l2) *
                           theta.at(m1, m2);
                }
            }
            re_terms.push_back(row.real());
            im_terms.push_back(row.imag());
        }
    }
    double re = pairwise_sum(re_terms);
    double im = pairwise_sum(im_terms);
    double scale = l2_norm(theta);
    if (std::abs(im) > 1e-12 * std::max(scale * scale * scale, 1e-300))
        throw std::runtime_error("triple_sum_S: imaginary residue exceeds tolerance");
    return re;
}

}  // namespace gqg
