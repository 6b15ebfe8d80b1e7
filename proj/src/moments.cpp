#include "swdl/moments.hpp"

#include <algorithm>
#include <cmath>

#include "swdl/quadrature.hpp"

namespace swdl {

namespace {

constexpr std::size_t kLineNodes = 4001;
constexpr double kEnergyFloor = 1e-30;

struct LineMoments {
    double total = 0.0;
    double moment = 0.0;
    double spread = 0.0;
};

// trapezoid moments of a nonnegative density given on a uniform lattice
LineMoments lattice_moments(const std::vector<double>& density, double x0,
                            double dx) {
    LineMoments m;
    double s0 = 0.0, s1 = 0.0;
    const std::size_t n = density.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        const double x = x0 + static_cast<double>(i) * dx;
        s0 += w * density[i];
        s1 += w * density[i] * x;
    }
    m.total = s0 * dx;
    if (m.total <= kEnergyFloor) throw ZeroEnergy("signal has (near) zero energy");
    m.moment = s1 / s0;
    double s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        const double x = x0 + static_cast<double>(i) * dx - m.moment;
        s2 += w * density[i] * x * x;
    }
    m.spread = s2 / s0;
    return m;
}

LineMoments time_moments(const Signal& f) {
    const Interval supp = f.support();
    const double dx = supp.length() / static_cast<double>(kLineNodes - 1);
    std::vector<double> dens(kLineNodes);
    for (std::size_t i = 0; i < kLineNodes; ++i) {
        dens[i] = std::norm(f(supp.lo + static_cast<double>(i) * dx));
    }
    return lattice_moments(dens, supp.lo, dx);
}

AxisSpec frequency_axis(const Signal& f) {
    const Interval band = f.band();
    const double pad = std::max(4.0, 0.3 * band.length());
    return AxisSpec{band.lo - pad, band.hi + pad, kLineNodes};
}

} // namespace

Stats time_stats(const Signal& f) {
    const LineMoments m = time_moments(f);
    return {m.moment, m.spread};
}

Stats frequency_stats(const Signal& f) {
    const AxisSpec axis = frequency_axis(f);
    const LctResult r = lct_quadrature(f, matrices::l1(), axis);
    std::vector<double> dens(r.values.size());
    for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = std::norm(r.values[i]);
    // |Ff| = |L^{L1} f|, so moments agree with the Fourier definition
    const LineMoments m = lattice_moments(dens, r.u0, r.du);
    return {m.moment, m.spread};
}

Stats lct_stats(const Signal& f, const SymplecticMatrix& m) {
    if (m.b() == 0.0) throw ZeroB("lct_stats requires b != 0");
    const Stats ts = time_stats(f);
    const Stats fs = frequency_stats(f);
    const double center = m.a() * ts.moment + m.b() * fs.moment;
    const double sigma = std::abs(m.a()) * std::sqrt(ts.spread) +
                         std::abs(m.b()) * std::sqrt(fs.spread);
    const double half = 10.0 * sigma + 0.25;
    const AxisSpec axis{center - half, center + half, kLineNodes};
    const LctResult r = lct_quadrature(f, m, axis);
    std::vector<double> dens(r.values.size());
    for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = std::norm(r.values[i]);
    const LineMoments mm = lattice_moments(dens, r.u0, r.du);
    return {mm.moment, mm.spread};
}

double signal_energy(const Signal& f) { return time_moments(f).total; }

SwdlStats swdl_stats(const TFGrid& grid, double f_norm2) {
    if (f_norm2 <= kEnergyFloor) throw ZeroEnergy("signal has (near) zero energy");
    const double norm4 = f_norm2 * f_norm2;
    double s0 = 0.0, st = 0.0, su = 0.0;
    double peak = 0.0;
    for (std::size_t it = 0; it < grid.nt; ++it) {
        const double wt = (it == 0 || it + 1 == grid.nt) ? 0.5 : 1.0;
        const double t = grid.t_at(it);
        for (std::size_t iu = 0; iu < grid.nu; ++iu) {
            const double w = wt * ((iu == 0 || iu + 1 == grid.nu) ? 0.5 : 1.0);
            const double p = std::norm(grid.at(it, iu));
            peak = std::max(peak, p);
            s0 += w * p;
            st += w * p * t;
            su += w * p * grid.u_at(iu);
        }
    }
    const double cell = grid.dt * grid.du;
    SwdlStats out;
    out.t_moment = st * cell / norm4;
    out.u_moment = su * cell / norm4;
    double vt = 0.0, vu = 0.0;
    for (std::size_t it = 0; it < grid.nt; ++it) {
        const double wt = (it == 0 || it + 1 == grid.nt) ? 0.5 : 1.0;
        const double t = grid.t_at(it) - out.t_moment;
        for (std::size_t iu = 0; iu < grid.nu; ++iu) {
            const double w = wt * ((iu == 0 || iu + 1 == grid.nu) ? 0.5 : 1.0);
            const double p = std::norm(grid.at(it, iu));
            const double uu = grid.u_at(iu) - out.u_moment;
            vt += w * p * t * t;
            vu += w * p * uu * uu;
        }
    }
    out.t_spread = vt * cell / norm4;
    out.u_spread = vu * cell / norm4;

    const double limit = 1e-6 * std::sqrt(peak);
    for (std::size_t it = 0; it < grid.nt && !out.truncation_warning; ++it) {
        if (std::abs(grid.at(it, 0)) > limit ||
            std::abs(grid.at(it, grid.nu - 1)) > limit) {
            out.truncation_warning = true;
        }
    }
    for (std::size_t iu = 0; iu < grid.nu && !out.truncation_warning; ++iu) {
        if (std::abs(grid.at(0, iu)) > limit ||
            std::abs(grid.at(grid.nt - 1, iu)) > limit) {
            out.truncation_warning = true;
        }
    }
    return out;
}

SwdlStats swdl_stats(const Signal& f, const SymplecticMatrix& a1,
                     const SymplecticMatrix& a2, const AxisSpec& t_grid,
                     const AxisSpec& u_grid) {
    const TFGrid g = swdl_definition(f, a1, a2, t_grid, u_grid);
    return swdl_stats(g, signal_energy(f));
}

Covariances covariances(const Signal& f) {
    const LineMoments tm = time_moments(f);
    const Stats fs = frequency_stats(f);
    const Interval supp = f.support();
    const double dx = supp.length() / static_cast<double>(kLineNodes - 1);
    double c = 0.0, ac = 0.0;
    for (std::size_t i = 0; i < kLineNodes; ++i) {
        const double w = (i == 0 || i + 1 == kLineNodes) ? 0.5 : 1.0;
        const double t = supp.lo + static_cast<double>(i) * dx;
        const double p = std::norm(f(t));
        if (p == 0.0) continue;
        const double dtm = t - tm.moment;
        const double dfm = f.phase_derivative(t) - fs.moment;
        c += w * p * dtm * dfm;
        ac += w * p * std::abs(dtm) * std::abs(dfm);
    }
    return {c * dx / tm.total, ac * dx / tm.total};
}

std::pair<AxisSpec, AxisSpec> suggest_grids(const Signal& f,
                                            const SymplecticMatrix& a1,
                                            const SymplecticMatrix& a2,
                                            double n_sigma) {
    const Stats ts = time_stats(f);
    const Stats fs = frequency_stats(f);
    const double st = std::sqrt(ts.spread);
    const double sw = std::sqrt(fs.spread);

    const double t_center = (a1.d() - a1.c()) * ts.moment;
    const double sigma_t =
        std::sqrt((a1.c() * a1.c() + a1.d() * a1.d()) * ts.spread);

    // products a2*a1, b2*d1 etc. never divide, so zero entries are fine here
    const double u3_mom = a2.a() * a1.a() * ts.moment + a2.b() * a1.d() * fs.moment;
    const double u4_mom = a2.a() * a1.b() * ts.moment + a2.b() * a1.c() * fs.moment;
    const double s3 =
        std::abs(a2.a() * a1.a()) * st + std::abs(a2.b() * a1.d()) * sw;
    const double s4 =
        std::abs(a2.a() * a1.b()) * st + std::abs(a2.b() * a1.c()) * sw;
    const double u_center = u3_mom - u4_mom;
    const double sigma_u = std::hypot(s3, s4);

    const auto axis = [n_sigma](double center, double sigma) {
        const double half = n_sigma * sigma + 0.1;
        const double step = sigma / 8.0;
        auto count = static_cast<std::size_t>(std::ceil(2.0 * half / step)) + 1;
        count = std::clamp<std::size_t>(count, 81, 801);
        return AxisSpec{center - half, center + half, count};
    };
    return {axis(t_center, sigma_t), axis(u_center, sigma_u)};
}

MomentReport moment_report(const Signal& f, const SymplecticMatrix& a1,
                           const SymplecticMatrix& a2, const AxisSpec& t_grid,
                           const AxisSpec& u_grid) {
    MomentReport r;
    const LineMoments tm = time_moments(f);
    r.t_moment = tm.moment;
    r.t_spread = tm.spread;
    r.energy = tm.total;
    const Stats fs = frequency_stats(f);
    r.omega_moment = fs.moment;
    r.omega_spread = fs.spread;
    const Stats s3 = lct_stats(f, derive_a3(a1, a2));
    r.u_moment_a3 = s3.moment;
    r.u_spread_a3 = s3.spread;
    const Stats s4 = lct_stats(f, derive_a4(a1, a2));
    r.u_moment_a4 = s4.moment;
    r.u_spread_a4 = s4.spread;
    const SwdlStats gs = swdl_stats(f, a1, a2, t_grid, u_grid);
    r.swdl_t_moment = gs.t_moment;
    r.swdl_t_spread = gs.t_spread;
    r.swdl_u_moment = gs.u_moment;
    r.swdl_u_spread = gs.u_spread;
    const Covariances cv = covariances(f);
    r.cov = cv.cov;
    r.abscov = cv.abscov;
    return r;
}

MomentReport moment_report(const Signal& f, const SymplecticMatrix& a1,
                           const SymplecticMatrix& a2) {
    const auto [tg, ug] = suggest_grids(f, a1, a2);
    return moment_report(f, a1, a2, tg, ug);
}

BoundReport lower_bound(SignalClass cls, const SymplecticMatrix& a1,
                        const SymplecticMatrix& a2, const MomentReport& stats,
                        double tolerance) {
    const double b2 = a2.b();
    const double q = a1.c() * a1.c() + a1.d() * a1.d();
    const double base = b2 * b2 * q * q / 4.0;
    BoundReport r;
    r.signal_class = cls;
    r.tolerance = tolerance;
    switch (cls) {
        case SignalClass::arbitrary:
            r.lower_bound = base;
            break;
        case SignalClass::real_valued: {
            const double p = a1.a() * a1.a() + a1.b() * a1.b();
            r.lower_bound =
                base + a2.a() * a2.a() * p * q * stats.t_spread * stats.t_spread;
            break;
        }
        case SignalClass::complex_valued: {
            const double m3 = a2.a() * a1.a() * stats.t_spread +
                              b2 * a1.d() * stats.cov;
            const double m4 = a2.a() * a1.b() * stats.t_spread +
                              b2 * a1.c() * stats.cov;
            const double bracket = (m3 * m3 + m4 * m4) * q;
            r.lower_bound = (0.25 + stats.abscov * stats.abscov -
                             stats.cov * stats.cov) *
                                b2 * b2 * q * q +
                            bracket;
            r.secondary_bound = base + bracket;
            break;
        }
    }
    r.product = stats.swdl_t_spread * stats.swdl_u_spread;
    r.slack = r.product - r.lower_bound;
    r.attained = std::abs(r.slack) <=
                 tolerance * std::max(r.lower_bound, kEnergyFloor);
    return r;
}

double uncertainty_product_mismatch(const MomentReport& r,
                                    const SymplecticMatrix& a1) {
    const double q = a1.c() * a1.c() + a1.d() * a1.d();
    const double direct = r.swdl_t_spread * r.swdl_u_spread;
    const double decomposed = q * r.t_spread * (r.u_spread_a3 + r.u_spread_a4);
    const double den = std::max(std::abs(direct), std::abs(decomposed));
    if (den == 0.0) return 0.0;
    return std::abs(direct - decomposed) / den;
}

double uncertainty_product(const Signal& f, const SymplecticMatrix& a1,
                           const SymplecticMatrix& a2, const AxisSpec& t_grid,
                           const AxisSpec& u_grid) {
    const MomentReport r = moment_report(f, a1, a2, t_grid, u_grid);
    const double mismatch = uncertainty_product_mismatch(r, a1);
    if (mismatch > 1e-2) {
        throw DecompositionMismatch(
            "grid moments and LCT decomposition disagree by " +
            std::to_string(mismatch) +
            " (truncation or sampling failure)");
    }
    return r.swdl_t_spread * r.swdl_u_spread;
}

} // namespace swdl
