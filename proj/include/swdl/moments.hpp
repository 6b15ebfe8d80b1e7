#pragma once

#include <optional>

#include "swdl/tfd.hpp"

namespace swdl {

/// First moment and centered second moment of a 1-D density.
struct Stats {
    double moment = 0.0;
    double spread = 0.0; ///< variance-style, >= 0
};

/// Moments of |f(t)|^2. Throws ZeroEnergy for the zero signal.
Stats time_stats(const Signal& f);

/// Moments of |Ff(omega)|^2 computed through the Fourier special case of the
/// LCT path.
Stats frequency_stats(const Signal& f);

/// Moments of |L^A f(u)|^2. Requires b != 0.
Stats lct_stats(const Signal& f, const SymplecticMatrix& m);

/// ||f||_2^2 over the support window.
double signal_energy(const Signal& f);

struct SwdlStats {
    double t_moment = 0.0;
    double t_spread = 0.0;
    double u_moment = 0.0;
    double u_spread = 0.0;
    bool truncation_warning = false;
};

/// 2-D moments of |W|^2 over the grid, normalized by ||f||^4 (Parseval form).
SwdlStats swdl_stats(const TFGrid& grid, double f_norm2);
SwdlStats swdl_stats(const Signal& f, const SymplecticMatrix& a1,
                     const SymplecticMatrix& a2, const AxisSpec& t_grid,
                     const AxisSpec& u_grid);

struct Covariances {
    double cov = 0.0;    ///< <(t-t0) f, (phi'-w0) f> / ||f||^2
    double abscov = 0.0; ///< same with absolute values; abscov >= |cov|
};

/// Needs an instantaneous frequency: closed form for analytic generators,
/// unwrapped central differences for sampled signals.
Covariances covariances(const Signal& f);

enum class SignalClass { arbitrary, real_valued, complex_valued };

/// Everything the bound evaluation needs, gathered in one pass.
struct MomentReport {
    double t_moment = 0.0, t_spread = 0.0;
    double omega_moment = 0.0, omega_spread = 0.0;
    double u_moment_a3 = 0.0, u_spread_a3 = 0.0;
    double u_moment_a4 = 0.0, u_spread_a4 = 0.0;
    double swdl_t_moment = 0.0, swdl_t_spread = 0.0;
    double swdl_u_moment = 0.0, swdl_u_spread = 0.0;
    double cov = 0.0, abscov = 0.0;
    double energy = 0.0; ///< ||f||^2
};

/// Bound evaluation for one signal class. For the complex class the primary
/// bound is the tighter (covariance-corrected) chain member and
/// `secondary_bound` carries the looser one.
struct BoundReport {
    SignalClass signal_class = SignalClass::arbitrary;
    double lower_bound = 0.0;
    double product = 0.0;
    double slack = 0.0; ///< product - lower_bound
    bool attained = false;
    std::optional<double> secondary_bound;
    double tolerance = 1e-4;
};

/// Grid axes sized from moment estimates: centers from the transported first
/// moments, spans of +-n_sigma spreads, resolution a fraction of the smallest
/// spread. Covers the distribution to well below the truncation threshold for
/// Gaussian-family signals.
std::pair<AxisSpec, AxisSpec> suggest_grids(const Signal& f,
                                            const SymplecticMatrix& a1,
                                            const SymplecticMatrix& a2,
                                            double n_sigma = 9.0);

/// Full report over a freshly computed grid (definition path).
MomentReport moment_report(const Signal& f, const SymplecticMatrix& a1,
                           const SymplecticMatrix& a2, const AxisSpec& t_grid,
                           const AxisSpec& u_grid);
MomentReport moment_report(const Signal& f, const SymplecticMatrix& a1,
                           const SymplecticMatrix& a2);

/// Theorem-style lower bounds from matrix entries and the report's moments.
BoundReport lower_bound(SignalClass cls, const SymplecticMatrix& a1,
                        const SymplecticMatrix& a2, const MomentReport& stats,
                        double tolerance = 1e-4);

/// Direct grid product Dt^2 * Du^2, cross-checked against the LCT-domain
/// decomposition (c1^2+d1^2)(Dt^2 Du^2_{A3} + Dt^2 Du^2_{A4}); throws
/// DecompositionMismatch when they disagree beyond 1e-2 relative. Returns the
/// direct value.
double uncertainty_product(const Signal& f, const SymplecticMatrix& a1,
                           const SymplecticMatrix& a2, const AxisSpec& t_grid,
                           const AxisSpec& u_grid);

/// Relative disagreement of the two routes (diagnostic).
double uncertainty_product_mismatch(const MomentReport& r,
                                    const SymplecticMatrix& a1);

} // namespace swdl
