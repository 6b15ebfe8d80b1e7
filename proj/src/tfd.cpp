#include "swdl/tfd.hpp"

#include <algorithm>
#include <cmath>

#include "swdl/quadrature.hpp"

namespace swdl {

namespace {

const cplx kJ{0.0, 1.0};

double abs_max(double lo, double hi) { return std::max(std::abs(lo), std::abs(hi)); }

// {e : lo <= shift + coef*e <= hi}; unbounded constraints are clipped later.
struct HalfRange {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool empty = false;
};

HalfRange argument_range(const Interval& supp, double shift, double coef) {
    HalfRange r;
    if (coef == 0.0) {
        r.empty = !(shift >= supp.lo && shift <= supp.hi);
        return r;
    }
    const double x = (supp.lo - shift) / coef;
    const double y = (supp.hi - shift) / coef;
    r.lo = std::min(x, y);
    r.hi = std::max(x, y);
    return r;
}

double grid_weight(std::size_t i, std::size_t n) {
    return (i == 0 || i + 1 == n) ? 0.5 : 1.0;
}

} // namespace

double TFGrid::peak_abs() const {
    double peak = 0.0;
    for (const auto& v : values) peak = std::max(peak, std::abs(v));
    return peak;
}

bool TFGrid::same_axes(const TFGrid& o) const {
    return nt == o.nt && nu == o.nu && t0 == o.t0 && dt == o.dt && u0 == o.u0 &&
           du == o.du;
}

cplx chi_prefactor(const SymplecticMatrix& a1, const SymplecticMatrix& a2, double u,
                   double t) {
    const double b2 = a2.b();
    const double prod = b2 * a1.c() * a1.d();
    const double phase = a2.d() / (2.0 * b2) * u * u +
                         a1.a() / (b2 * a1.c()) * u * t +
                         a2.a() * a1.a() * a1.b() / (2.0 * prod) * t * t;
    return std::polar(1.0, phase) / std::sqrt(kJ * prod);
}

TFGrid swdl_definition(const Signal& f, const SymplecticMatrix& a1,
                       const SymplecticMatrix& a2, const AxisSpec& t_grid,
                       const AxisSpec& u_grid) {
    if (a2.b() == 0.0) throw ZeroB("swdl requires b2 != 0");
    TFGrid g;
    g.t0 = t_grid.lo;
    g.dt = t_grid.step();
    g.u0 = u_grid.lo;
    g.du = u_grid.step();
    g.nt = t_grid.count;
    g.nu = u_grid.count;
    g.a1 = a1;
    g.a2 = a2;
    g.method = Method::definition;
    g.values.assign(g.nt * g.nu, cplx{0.0, 0.0});

    const Interval supp = f.support();
    const double b2 = a2.b();
    const cplx kamp = 1.0 / std::sqrt(kJ * (2.0 * M_PI * b2));
    const double acoef = a2.a() / (2.0 * b2);
    const double dcoef = a2.d() / (2.0 * b2);
    const double umax = abs_max(u_grid.lo, u_grid.hi);
    const double fmax = f.max_abs_frequency();
    const double coef_scale = std::max(std::abs(a1.c()), std::abs(a1.d()));
    const double env_eps =
        std::isfinite(f.env_scale()) ? f.env_scale() / coef_scale
                                     : std::numeric_limits<double>::infinity();

    for (std::size_t it = 0; it < g.nt; ++it) {
        const double t = t_grid.at(it);
        const HalfRange r1 = argument_range(supp, a1.b() * t, a1.d());
        const HalfRange r2 = argument_range(supp, a1.a() * t, a1.c());
        if (r1.empty || r2.empty) continue;
        const double lo = std::max(r1.lo, r2.lo);
        const double hi = std::min(r1.hi, r2.hi);
        if (!(lo < hi)) continue;
        if (!std::isfinite(lo) || !std::isfinite(hi)) {
            // c1 and d1 cannot both vanish for a symplectic matrix
            throw UnboundedSupport("epsilon range unbounded");
        }
        const double emax = abs_max(lo, hi);
        const double rate = umax / std::abs(b2) + std::abs(acoef) * 2.0 * emax +
                            fmax * (std::abs(a1.d()) + std::abs(a1.c()));
        const int panels =
            quadrature::oscillation_panels(hi - lo, rate, env_eps, 8);
        const auto pn = quadrature::panel_nodes(lo, hi, panels);
        std::vector<cplx> q(pn.x.size());
        for (std::size_t i = 0; i < pn.x.size(); ++i) {
            const double e = pn.x[i];
            q[i] = f(a1.b() * t + a1.d() * e) * std::conj(f(a1.a() * t + a1.c() * e)) *
                   kamp * pn.w[i] * std::polar(1.0, acoef * e * e);
        }
        const auto row = detail::dlt_sum(pn.x, q, u_grid, b2, dcoef);
        std::copy(row.begin(), row.end(), g.values.begin() + it * g.nu);
    }
    return g;
}

TFGrid swdl_equivalent(const Signal& f, const SymplecticMatrix& a1,
                       const SymplecticMatrix& a2, const AxisSpec& t_grid,
                       const AxisSpec& u_grid) {
    if (a2.b() == 0.0) throw ZeroB("swdl requires b2 != 0");
    for (const auto& [v, name] :
         {std::pair{a1.a(), "a1"}, {a1.b(), "b1"}, {a1.c(), "c1"}, {a1.d(), "d1"}}) {
        if (v == 0.0) {
            throw ZeroEntry(std::string("equivalent path requires ") + name +
                            " != 0");
        }
    }
    const SymplecticMatrix a3 = derive_a3(a1, a2);
    const SymplecticMatrix a4 = derive_a4(a1, a2);
    const double b2 = a2.b();
    const double prod = b2 * a1.c() * a1.d();

    const Interval supp = f.support();
    const Interval band = f.band();
    const double t_half = 0.5 * supp.length();
    const double w_half = 0.5 * band.length();
    const double t_mid = supp.mid();
    const double w_mid = band.mid();

    const auto transformed_window = [&](const SymplecticMatrix& m, double& center,
                                        double& half) {
        center = m.a() * t_mid + m.b() * w_mid;
        half = std::abs(m.a()) * t_half + std::abs(m.b()) * w_half;
        half = 1.1 * half + 0.25;
    };
    double c3, h3, c4, h4;
    transformed_window(a3, c3, h3);
    transformed_window(a4, c4, h4);

    // lattice pitch: keep the sampled spectrum of
    // Lam3(v) conj(Lam4(v-u)) e^{-j tau v} below the lattice Nyquist rate
    const double t_supp_max = abs_max(supp.lo, supp.hi);
    const double tau_max = abs_max(t_grid.lo, t_grid.hi) / std::abs(prod);
    const double r3 = t_supp_max / std::abs(a3.b());
    const double r4 = t_supp_max / std::abs(a4.b());
    const double dv_target = 2.0 * M_PI / (1.5 * (tau_max + r3 + r4) + 8.0);
    const double du = u_grid.step();
    const std::size_t k_ratio =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(du / dv_target)));
    const double dv = du / static_cast<double>(k_ratio);

    const double v3_lo = c3 - h3;
    const auto n3 = static_cast<std::size_t>(std::ceil(2.0 * h3 / dv)) + 1;
    // Lam4 lattice shares the pitch and is anchored so v3_i - u_k lands on it.
    const double base4 = v3_lo - u_grid.lo;
    const auto n4_first = static_cast<std::ptrdiff_t>(std::floor((c4 - h4 - base4) / dv));
    const auto n4_last = static_cast<std::ptrdiff_t>(std::ceil((c4 + h4 - base4) / dv));
    const auto n4 = static_cast<std::size_t>(n4_last - n4_first + 1);

    const AxisSpec v3_axis{v3_lo, v3_lo + dv * static_cast<double>(n3 - 1), n3};
    const AxisSpec v4_axis{base4 + dv * static_cast<double>(n4_first),
                           base4 + dv * static_cast<double>(n4_last), n4};
    LctResult l3 = lct_quadrature(f, a3, v3_axis);
    LctResult l4 = lct_quadrature(f, a4, v4_axis);
    const double corr3 = -a2.d() / (2.0 * b2 * a1.a() * a1.d());
    const double corr4 = -a2.d() / (2.0 * b2 * a1.b() * a1.c());
    for (std::size_t i = 0; i < n3; ++i) {
        const double v = v3_axis.at(i);
        l3.values[i] *= std::polar(1.0, corr3 * v * v);
    }
    for (std::size_t i = 0; i < n4; ++i) {
        const double v = v4_axis.at(i);
        l4.values[i] *= std::polar(1.0, corr4 * v * v);
    }

    TFGrid g;
    g.t0 = t_grid.lo;
    g.dt = t_grid.step();
    g.u0 = u_grid.lo;
    g.du = du;
    g.nt = t_grid.count;
    g.nu = u_grid.count;
    g.a1 = a1;
    g.a2 = a2;
    g.method = Method::equivalent;
    g.values.assign(g.nt * g.nu, cplx{0.0, 0.0});

    // Constant assembled from the three kernel amplitudes of the derivation
    // (A2 forward, A3/A4 inverse) times the delta-sifting factor 2 pi |b2|.
    // The collapsed closed form 1/sqrt(j b2 c1 d1) flips sign for some sign
    // patterns of (b2, b2 d1, b2 c1) under principal branches.
    const cplx amp2 = 1.0 / std::sqrt(kJ * (2.0 * M_PI * b2));
    const cplx amp3 = 1.0 / std::sqrt(-kJ * (2.0 * M_PI * a3.b()));
    const cplx amp4 = 1.0 / std::sqrt(-kJ * (2.0 * M_PI * a4.b()));
    const cplx c_total =
        2.0 * M_PI * std::abs(b2) * amp2 * amp3 * std::conj(amp4);

    std::vector<cplx> phasor(n3);
    for (std::size_t it = 0; it < g.nt; ++it) {
        const double t = t_grid.at(it);
        const double tau = t / prod;
        const cplx step = std::polar(1.0, -tau * dv);
        cplx ph = std::polar(1.0, -tau * v3_axis.lo);
        for (std::size_t i = 0; i < n3; ++i) {
            phasor[i] = ph;
            ph *= step;
        }
        for (std::size_t iu = 0; iu < g.nu; ++iu) {
            // v3_i - u_iu sits at Lam4 array index i - iu*k_ratio - n4_first
            const std::ptrdiff_t shift =
                -static_cast<std::ptrdiff_t>(iu * k_ratio) - n4_first;
            const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -shift);
            const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(
                static_cast<std::ptrdiff_t>(n3),
                static_cast<std::ptrdiff_t>(n4) - shift);
            cplx acc{0.0, 0.0};
            for (std::ptrdiff_t i = lo; i < hi; ++i) {
                acc += l3.values[static_cast<std::size_t>(i)] *
                       std::conj(l4.values[static_cast<std::size_t>(i + shift)]) *
                       phasor[static_cast<std::size_t>(i)];
            }
            const double u = u_grid.at(iu);
            const double phi = a2.d() / (2.0 * b2) * u * u +
                               a1.a() / (b2 * a1.c()) * u * t +
                               a2.a() * a1.a() * a1.b() / (2.0 * prod) * t * t;
            g.at(it, iu) = std::polar(1.0, phi) * c_total * acc * dv;
        }
    }
    return g;
}

TFGrid swdl(const Signal& f, const SymplecticMatrix& a1, const SymplecticMatrix& a2,
            const AxisSpec& t_grid, const AxisSpec& u_grid, Method method) {
    return method == Method::definition ? swdl_definition(f, a1, a2, t_grid, u_grid)
                                        : swdl_equivalent(f, a1, a2, t_grid, u_grid);
}

TFGrid special_case(const Signal& f, SpecialCase which,
                    std::optional<SymplecticMatrix> a1,
                    std::optional<SymplecticMatrix> a2, const AxisSpec& t_grid,
                    const AxisSpec& u_grid) {
    switch (which) {
        case SpecialCase::wd:
            return swdl_definition(f, matrices::wd_a1(), matrices::l1(), t_grid,
                                   u_grid);
        case SpecialCase::swd:
            if (!a1) throw DegenerateInput("SWD requires the A1 matrix");
            return swdl_definition(f, *a1, matrices::l1(), t_grid, u_grid);
        case SpecialCase::wdl:
            if (!a2) throw DegenerateInput("WDL requires the A2 matrix");
            return swdl_definition(f, matrices::wd_a1(), *a2, t_grid, u_grid);
    }
    throw DegenerateInput("unknown special case");
}

namespace {

bool edge_truncation(const TFGrid& g, bool along_u) {
    const double limit = 1e-6 * g.peak_abs();
    if (along_u) {
        for (std::size_t it = 0; it < g.nt; ++it) {
            if (std::abs(g.at(it, 0)) > limit || std::abs(g.at(it, g.nu - 1)) > limit) {
                return true;
            }
        }
    } else {
        for (std::size_t iu = 0; iu < g.nu; ++iu) {
            if (std::abs(g.at(0, iu)) > limit || std::abs(g.at(g.nt - 1, iu)) > limit) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

MarginalResult marginal_time(const TFGrid& grid, const SymplecticMatrix& a2) {
    const SymplecticMatrix inv = a2.inverse();
    std::vector<cplx> kern(grid.nu);
    for (std::size_t iu = 0; iu < grid.nu; ++iu) {
        kern[iu] = lct_kernel(inv, 0.0, grid.u_at(iu)) *
                   (grid_weight(iu, grid.nu) * grid.du);
    }
    MarginalResult r;
    r.values.resize(grid.nt);
    for (std::size_t it = 0; it < grid.nt; ++it) {
        cplx acc{0.0, 0.0};
        for (std::size_t iu = 0; iu < grid.nu; ++iu) {
            acc += grid.at(it, iu) * kern[iu];
        }
        r.values[it] = acc;
    }
    r.truncation_warning = edge_truncation(grid, true);
    return r;
}

MarginalResult marginal_lcf(const TFGrid& grid, const SymplecticMatrix& a1,
                            const SymplecticMatrix& a2) {
    const SymplecticMatrix a5 = derive_a5(a1, a2);
    const SymplecticMatrix inv = a5.inverse();
    std::vector<cplx> kern(grid.nt);
    for (std::size_t it = 0; it < grid.nt; ++it) {
        kern[it] = lct_kernel(inv, grid.t_at(it), 0.0) *
                   (grid_weight(it, grid.nt) * grid.dt);
    }
    MarginalResult r;
    r.values.resize(grid.nu);
    for (std::size_t iu = 0; iu < grid.nu; ++iu) {
        cplx acc{0.0, 0.0};
        for (std::size_t it = 0; it < grid.nt; ++it) {
            acc += grid.at(it, iu) * kern[it];
        }
        r.values[iu] = acc;
    }
    r.truncation_warning = edge_truncation(grid, false);
    return r;
}

SampledSignal reconstruct(const TFGrid& grid, const SymplecticMatrix& a1,
                          const SymplecticMatrix& a2, cplx f0,
                          const AxisSpec& t_out) {
    if (std::abs(f0) < 1e-12) {
        throw ZeroAtOrigin("reconstruction needs |f(0)| >= 1e-12");
    }
    const SymplecticMatrix inv = a2.inverse();
    std::vector<cplx> out(t_out.count);
    std::vector<double> taps;
    std::vector<cplx> column(grid.nu);
    for (std::size_t k = 0; k < t_out.count; ++k) {
        const double t = t_out.at(k);
        const double tp = -a1.c() * t;
        const double x = (tp - grid.t0) / grid.dt;
        if (x < 0.0 || x > static_cast<double>(grid.nt - 1)) {
            out[k] = {0.0, 0.0};
            continue;
        }
        std::size_t i_begin = 0;
        detail::sinc_taps(x, grid.nt, i_begin, taps);
        for (std::size_t iu = 0; iu < grid.nu; ++iu) {
            cplx w{0.0, 0.0};
            for (std::size_t j = 0; j < taps.size(); ++j) {
                w += grid.at(i_begin + j, iu) * taps[j];
            }
            column[iu] = w;
        }
        cplx acc{0.0, 0.0};
        for (std::size_t iu = 0; iu < grid.nu; ++iu) {
            acc += column[iu] * lct_kernel(inv, a1.a() * t, grid.u_at(iu)) *
                   (grid_weight(iu, grid.nu) * grid.du);
        }
        out[k] = acc / std::conj(f0);
    }
    return SampledSignal(t_out.lo, t_out.step(), std::move(out));
}

cplx energy_time(const TFGrid& grid) {
    const MarginalResult m = marginal_time(grid, grid.a2);
    cplx acc{0.0, 0.0};
    for (std::size_t it = 0; it < grid.nt; ++it) {
        acc += m.values[it] * (grid_weight(it, grid.nt) * grid.dt);
    }
    return std::abs(grid.a1.b()) * acc;
}

cplx energy_lcf(const TFGrid& grid) {
    const MarginalResult m = marginal_lcf(grid, grid.a1, grid.a2);
    cplx acc{0.0, 0.0};
    for (std::size_t iu = 0; iu < grid.nu; ++iu) {
        acc += m.values[iu] * (grid_weight(iu, grid.nu) * grid.du);
    }
    return std::abs(grid.a1.b()) * std::conj(std::sqrt(cplx(grid.a1.c(), 0.0))) *
           std::sqrt(cplx(grid.a1.d(), 0.0)) * acc;
}

cplx energy_origin(const TFGrid& grid) {
    return std::abs(grid.a1.d()) *
           std::sqrt(kJ * (2.0 * M_PI * grid.a2.b())) *
           grid_interpolate(grid, 0.0, 0.0);
}

cplx grid_interpolate(const TFGrid& grid, double t, double u) {
    const double xt = (t - grid.t0) / grid.dt;
    const double xu = (u - grid.u0) / grid.du;
    if (xt < 0.0 || xt > static_cast<double>(grid.nt - 1) || xu < 0.0 ||
        xu > static_cast<double>(grid.nu - 1)) {
        return {0.0, 0.0};
    }
    std::size_t t_begin = 0, u_begin = 0;
    std::vector<double> wt, wu;
    detail::sinc_taps(xt, grid.nt, t_begin, wt);
    detail::sinc_taps(xu, grid.nu, u_begin, wu);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < wt.size(); ++i) {
        cplx row{0.0, 0.0};
        for (std::size_t k = 0; k < wu.size(); ++k) {
            row += grid.at(t_begin + i, u_begin + k) * wu[k];
        }
        acc += row * wt[i];
    }
    return acc;
}

cplx moyal_inner(const TFGrid& f_grid, const TFGrid& g_grid) {
    if (!f_grid.same_axes(g_grid)) {
        throw AxisMismatch("Moyal inner product requires identical axes");
    }
    cplx acc{0.0, 0.0};
    for (std::size_t it = 0; it < f_grid.nt; ++it) {
        const double wt = grid_weight(it, f_grid.nt);
        for (std::size_t iu = 0; iu < f_grid.nu; ++iu) {
            acc += wt * grid_weight(iu, f_grid.nu) * f_grid.at(it, iu) *
                   std::conj(g_grid.at(it, iu));
        }
    }
    return acc * (f_grid.dt * f_grid.du);
}

double grid_l2_norm(const TFGrid& grid) {
    double acc = 0.0;
    for (std::size_t it = 0; it < grid.nt; ++it) {
        const double wt = grid_weight(it, grid.nt);
        for (std::size_t iu = 0; iu < grid.nu; ++iu) {
            acc += wt * grid_weight(iu, grid.nu) * std::norm(grid.at(it, iu));
        }
    }
    return std::sqrt(acc * grid.dt * grid.du);
}

double grid_rel_l2_distance(const TFGrid& x, const TFGrid& y) {
    if (!x.same_axes(y)) throw AxisMismatch("grids live on different axes");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        num += std::norm(x.values[i] - y.values[i]);
        den += std::norm(x.values[i]);
    }
    if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(num / den);
}

} // namespace swdl
