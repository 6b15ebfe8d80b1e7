#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "swdl/signal.hpp"
#include "swdl/symplectic.hpp"

namespace swdl {

/// Uniform axis lo..hi inclusive with `count` points (count >= 2).
struct AxisSpec {
    double lo;
    double hi;
    std::size_t count;

    double step() const { return (hi - lo) / static_cast<double>(count - 1); }
    double at(std::size_t i) const { return lo + static_cast<double>(i) * step(); }
};

/// Transform values over a uniform output lattice.
struct LctResult {
    double u0 = 0.0;
    double du = 0.0;
    std::vector<cplx> values;
    bool alias_risk = false; ///< fast path only: per-sample phase increment neared pi

    double u_at(std::size_t i) const { return u0 + static_cast<double>(i) * du; }
    Interval span() const {
        return {u0, u0 + du * static_cast<double>(values.size() - 1)};
    }
};

/// Kernel value (1/sqrt(j 2 pi b)) e^{j(d/(2b) u^2 - u t / b + a/(2b) t^2)}.
/// All complex square roots take the principal branch. Throws ZeroB when b=0.
cplx lct_kernel(const SymplecticMatrix& m, double u, double t);

/// Reference path: composite Gauss-Legendre over the signal support with
/// oscillation-aware panel sizing (phase advance bounded per panel,
/// panel count >= max(64, 8*len*max_rate/(2 pi))). The b=0 degenerate case
/// dispatches to the scaling-chirp form sqrt(d) e^{j c d u^2/2} f(d u).
LctResult lct_quadrature(const Signal& f, const SymplecticMatrix& m,
                         const AxisSpec& u_grid);

/// Fast path: chirp-multiply / FFT / chirp-multiply (Bluestein) evaluation of
/// the same discretized integral, O(M log M). Sets alias_risk when the
/// chirp-multiplied signal's phase increment per sample approaches pi.
LctResult lct_fast(const SampledSignal& s, const SymplecticMatrix& m,
                   const AxisSpec& u_grid);

/// Inverse transform of a gridded result: quadrature of g against the kernel
/// of m^{-1} over the result's lattice.
LctResult lct_inverse(const LctResult& g, const SymplecticMatrix& m,
                      const AxisSpec& t_grid);

/// Max |d phase/dt| of the kernel over t in `supp` for outputs up to |u|max.
double kernel_phase_rate(const SymplecticMatrix& m, double u_absmax,
                         const Interval& supp);

namespace detail {
/// out[k] = e^{j dcoef u_k^2} sum_i q_i e^{-j u_k x_i / b} over the uniform
/// output lattice, with phasor recurrences along k. q_i carry quadrature
/// weights and all u-independent factors.
std::vector<cplx> dlt_sum(const std::vector<double>& x, const std::vector<cplx>& q,
                          const AxisSpec& out, double b, double dcoef);
} // namespace detail

} // namespace swdl
