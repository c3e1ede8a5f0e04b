#include "gqg/transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace gqg {
namespace {

// Cached c2c plans per grid size, executing on internally owned aligned
// buffers. FFTW's planner is not thread-safe; the whole fill/execute/drain
// cycle runs under one lock and callers copy in/out, so transforms stay pure.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache c;
        return c;
    }

    template <class Fill, class Drain>
    void transform(int m, bool forward, Fill&& fill, Drain&& drain) {
        std::lock_guard<std::mutex> lock(mu_);
        Entry& e = entries_[m];
        if (!e.buf) {
            e.buf = fftw_alloc_complex(static_cast<size_t>(m) * m);
            e.fwd = fftw_plan_dft_2d(m, m, e.buf, e.buf, FFTW_FORWARD, FFTW_ESTIMATE);
            e.bwd = fftw_plan_dft_2d(m, m, e.buf, e.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        }
        fill(e.buf);
        fftw_execute(forward ? e.fwd : e.bwd);
        drain(e.buf);
    }

  private:
    struct Entry {
        fftw_complex* buf = nullptr;
        fftw_plan fwd = nullptr;  // e^{-ik.x} sign
        fftw_plan bwd = nullptr;  // e^{+ik.x} sign
        Entry() = default;
        Entry(const Entry&) = delete;
        Entry& operator=(const Entry&) = delete;
        ~Entry() {
            if (fwd) fftw_destroy_plan(fwd);
            if (bwd) fftw_destroy_plan(bwd);
            if (buf) fftw_free(buf);
        }
    };

    std::mutex mu_;
    std::map<int, Entry> entries_;
};

inline int wrap(int k, int m) { return ((k % m) + m) % m; }

}  // namespace

SpectralField to_spectral_as(const PhysicalField& f, int n_target) {
    const int m = f.grid().M;
    if (m < 2 * n_target + 2)
        throw std::invalid_argument("to_spectral_as: grid too coarse for requested truncation");
    SpectralField out(Grid(n_target, m));

    const double inv_m2 = 1.0 / (static_cast<double>(m) * m);
    PlanCache::instance().transform(
        m, /*forward=*/true,
        [&](fftw_complex* buf) {
            const auto& v = f.values();
            for (size_t i = 0; i < v.size(); ++i) {
                buf[i][0] = v[i];
                buf[i][1] = 0.0;
            }
        },
        [&](fftw_complex* buf) {
            for (int k1 = -n_target; k1 <= n_target; ++k1) {
                const size_t row = static_cast<size_t>(wrap(k1, m)) * m;
                for (int k2 = -n_target; k2 <= n_target; ++k2) {
                    const size_t idx = row + wrap(k2, m);
                    out.at(k1, k2) = cplx{buf[idx][0] * inv_m2, buf[idx][1] * inv_m2};
                }
            }
        });
    out.enforce_hermitian();
    return out;
}

SpectralField to_spectral(const PhysicalField& f) { return to_spectral_as(f, f.grid().N); }

PhysicalField to_physical_on(const SpectralField& f, int m_points) {
    const int n = f.grid().N;
    const int m = m_points;
    if (m < 2 * n + 2)
        throw std::invalid_argument("to_physical_on: grid too coarse for the mode set");

    // coefficient-sum bound on sup|theta|, scale for the residue check
    double coeff_mag = 0.0;
    for (const auto& c : f.coeffs()) coeff_mag += std::abs(c);

    PhysicalField out(Grid(n, m));
    double max_im = 0.0;
    PlanCache::instance().transform(
        m, /*forward=*/false,
        [&](fftw_complex* buf) {
            std::fill(&buf[0][0], &buf[0][0] + 2 * static_cast<size_t>(m) * m, 0.0);
            for (int k1 = -n; k1 <= n; ++k1) {
                const size_t row = static_cast<size_t>(wrap(k1, m)) * m;
                for (int k2 = -n; k2 <= n; ++k2) {
                    const cplx& c = f.at(k1, k2);
                    const size_t idx = row + wrap(k2, m);
                    buf[idx][0] = c.real();
                    buf[idx][1] = c.imag();
                }
            }
        },
        [&](fftw_complex* buf) {
            auto& v = out.values();
            for (size_t i = 0; i < v.size(); ++i) {
                v[i] = buf[i][0];
                max_im = std::max(max_im, std::abs(buf[i][1]));
            }
        });

    if (max_im > 1e-12 * std::max(coeff_mag, 1e-300))
        throw std::runtime_error("to_physical: imaginary residue exceeds tolerance "
                                 "(Hermitian symmetry violated)");
    return out;
}

PhysicalField to_physical(const SpectralField& f) { return to_physical_on(f, f.grid().M); }

}  // namespace gqg
