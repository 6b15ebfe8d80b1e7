// Test-only helpers: independent quadrature oracles, closed forms for the
// Gaussian family, and deterministic random-matrix generators. Everything
// here stays independent of the library's oscillation-aware integration so
// cross-checks mean something.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "swdl/signal.hpp"
#include "swdl/symplectic.hpp"

namespace oracles {

using swdl::cplx;

// plain composite Simpson over [lo,hi]; n intervals (even)
inline cplx simpson(const std::function<cplx(double)>& f, double lo, double hi,
                    int n = 4000) {
    if (n % 2) ++n;
    const double h = (hi - lo) / n;
    cplx acc = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) {
        acc += f(lo + i * h) * ((i % 2) ? 4.0 : 2.0);
    }
    return acc * (h / 3.0);
}

inline double simpson_real(const std::function<double(double)>& f, double lo,
                           double hi, int n = 4000) {
    return simpson([&](double x) { return cplx(f(x), 0.0); }, lo, hi, n).real();
}

// ||f||_2^2 of a gaussian exp(-(t-t0)^2/(2 zeta) + eps): e^{2 eps} sqrt(pi zeta)
inline double gaussian_energy(double zeta, double eps) {
    return std::exp(2.0 * eps) * std::sqrt(M_PI * zeta);
}

// closed-form Wigner surface of the unit gaussian (zeta = 1):
// W(t, omega) = sqrt(2) e^{-t^2 - omega^2}, before the 1/sqrt(j) kernel factor
inline double wd_gaussian_abs(double t, double omega) {
    return std::sqrt(2.0) * std::exp(-t * t - omega * omega);
}

// deterministic random symplectic matrices whose entries stay in ranges that
// keep every derived matrix (A3..A5) numerically comfortable
class MatrixSampler {
  public:
    explicit MatrixSampler(unsigned seed) : rng_(seed) {}

    swdl::SymplecticMatrix a1_lemma_compatible() {
        for (;;) {
            const double a = pick(0.6, 1.8);
            const double b = pick(0.6, 1.8);
            const double c = pick(0.25, 0.8);
            const double d = (1.0 + b * c) / a;
            if (std::abs(d) < 0.25 || std::abs(d) > 2.5) continue;
            return swdl::SymplecticMatrix(a, b, c, d);
        }
    }

    swdl::SymplecticMatrix a2_kernel() {
        for (;;) {
            const double a = uniform(-0.8, 0.8);
            const double b = pick(0.45, 1.4);
            const double d = uniform(-1.2, 1.2);
            const double c = (a * d - 1.0) / b;
            if (std::abs(c) > 4.0) continue;
            return swdl::SymplecticMatrix(a, b, c, d);
        }
    }

    // any symplectic matrix (entries may be near zero); for validate() sweeps
    swdl::SymplecticMatrix any() {
        for (;;) {
            const double a = uniform(-2.0, 2.0);
            const double b = uniform(-2.0, 2.0);
            const double c = uniform(-2.0, 2.0);
            if (std::abs(a) < 1e-3) continue;
            const double d = (1.0 + b * c) / a;
            if (std::abs(d) > 10.0) continue;
            return swdl::SymplecticMatrix(a, b, c, d);
        }
    }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    // magnitude in [lo,hi], random sign
    double pick(double lo, double hi) {
        const double v = uniform(lo, hi);
        return std::bernoulli_distribution(0.5)(rng_) ? v : -v;
    }

  private:
    std::mt19937 rng_;
};

} // namespace oracles
