#include "swdl/lct.hpp"

#include <cmath>

#include "swdl/fft.hpp"
#include "swdl/quadrature.hpp"

namespace swdl {

namespace {

const cplx kJ{0.0, 1.0};

double abs_max(double lo, double hi) { return std::max(std::abs(lo), std::abs(hi)); }

cplx kernel_amplitude(double b) {
    // 1/sqrt(j 2 pi b), principal branch
    return 1.0 / std::sqrt(kJ * (2.0 * M_PI * b));
}

} // namespace

double kernel_phase_rate(const SymplecticMatrix& m, double u_absmax,
                         const Interval& supp) {
    const double tmax = abs_max(supp.lo, supp.hi);
    return (std::abs(m.a()) * tmax + u_absmax) / std::abs(m.b());
}

cplx lct_kernel(const SymplecticMatrix& m, double u, double t) {
    if (m.b() == 0.0) throw ZeroB("LCT kernel requires b != 0");
    const double b = m.b();
    const double phase = m.d() / (2.0 * b) * u * u - u * t / b + m.a() / (2.0 * b) * t * t;
    return kernel_amplitude(b) * std::polar(1.0, phase);
}

namespace detail {

// Shared evaluation core: out[k] = e^{j dcoef u_k^2} sum_i q_i e^{-j u_k x_i / b}
// with phasor recurrences along the uniform output lattice. q_i carry
// quadrature weights and every u-independent factor.
std::vector<cplx> dlt_sum(const std::vector<double>& x, const std::vector<cplx>& q,
                          const AxisSpec& out, double b, double dcoef) {
    const std::size_t n = x.size();
    std::vector<cplx> phasor(n), step(n);
    const double du = out.step();
    for (std::size_t i = 0; i < n; ++i) {
        phasor[i] = std::polar(1.0, -out.lo * x[i] / b);
        step[i] = std::polar(1.0, -du * x[i] / b);
    }
    std::vector<cplx> result(out.count);
    for (std::size_t k = 0; k < out.count; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            acc += q[i] * phasor[i];
            phasor[i] *= step[i];
        }
        const double uk = out.at(k);
        result[k] = std::polar(1.0, dcoef * uk * uk) * acc;
    }
    return result;
}

} // namespace detail

LctResult lct_quadrature(const Signal& f, const SymplecticMatrix& m,
                         const AxisSpec& u_grid) {
    const Interval supp = f.support();
    if (!std::isfinite(supp.lo) || !std::isfinite(supp.hi)) {
        throw UnboundedSupport("signal support must be finite for quadrature");
    }
    LctResult r;
    r.u0 = u_grid.lo;
    r.du = u_grid.step();
    if (m.b() == 0.0) {
        // degenerate LCT: sqrt(d) e^{j c d u^2 / 2} f(d u)
        const cplx sd = std::sqrt(cplx(m.d(), 0.0));
        r.values.resize(u_grid.count);
        for (std::size_t k = 0; k < u_grid.count; ++k) {
            const double u = u_grid.at(k);
            r.values[k] =
                sd * std::polar(1.0, m.c() * m.d() * u * u / 2.0) * f(m.d() * u);
        }
        return r;
    }
    const double umax = abs_max(u_grid.lo, u_grid.hi);
    const double rate = kernel_phase_rate(m, umax, supp) + f.max_abs_frequency();
    const double len = supp.length();
    const int floor_panels =
        std::max(64, static_cast<int>(std::ceil(8.0 * len * rate / (2.0 * M_PI))));
    const int panels =
        quadrature::oscillation_panels(len, rate, f.env_scale(), floor_panels);
    const auto pn = quadrature::panel_nodes(supp.lo, supp.hi, panels);

    const double b = m.b();
    const cplx kamp = kernel_amplitude(b);
    const double acoef = m.a() / (2.0 * b);
    std::vector<cplx> q(pn.x.size());
    for (std::size_t i = 0; i < pn.x.size(); ++i) {
        q[i] = f(pn.x[i]) * kamp * pn.w[i] * std::polar(1.0, acoef * pn.x[i] * pn.x[i]);
    }
    r.values = detail::dlt_sum(pn.x, q, u_grid, b, m.d() / (2.0 * b));
    return r;
}

LctResult lct_fast(const SampledSignal& s, const SymplecticMatrix& m,
                   const AxisSpec& u_grid) {
    if (m.b() == 0.0) throw ZeroB("fast LCT requires b != 0");
    const double b = m.b();
    const double dt = s.dt();
    const std::size_t mcount = s.size();
    const std::size_t ncount = u_grid.count;
    const double t0 = s.t0();
    const double du = u_grid.step();
    const double u0 = u_grid.lo;

    LctResult r;
    r.u0 = u0;
    r.du = du;

    const double tmax = abs_max(s.span().lo, s.span().hi);
    const double umax = abs_max(u_grid.lo, u_grid.hi);
    r.alias_risk =
        (std::abs(m.a() / b) * tmax + umax / std::abs(b)) * dt >= 0.75 * M_PI;

    // Bluestein factorization of y_m = sum_k g_k e^{-j u_m t_k / b}:
    // with gamma = du dt / (2b), mk du dt / b = gamma (m^2 + k^2 - (m-k)^2).
    const double gamma = du * dt / (2.0 * b);
    const cplx kamp = kernel_amplitude(b);
    const double acoef = m.a() / (2.0 * b);

    std::vector<cplx> a_seq(mcount);
    for (std::size_t k = 0; k < mcount; ++k) {
        const double tk = s.t_at(k);
        const double w = (k == 0 || k + 1 == mcount) ? 0.5 : 1.0; // trapezoid ends
        const cplx g = s.values()[k] * kamp * (w * dt) *
                       std::polar(1.0, acoef * tk * tk);
        const double kk = static_cast<double>(k);
        a_seq[k] = g * std::polar(1.0, -(u0 * dt * kk / b + gamma * kk * kk));
    }
    std::vector<cplx> c_seq(mcount + ncount - 1);
    for (std::size_t p = 0; p < c_seq.size(); ++p) {
        const double n = static_cast<double>(p) - static_cast<double>(mcount - 1);
        c_seq[p] = std::polar(1.0, gamma * n * n);
    }
    const auto conv = fft::linear_convolve(std::move(a_seq), std::move(c_seq));

    r.values.resize(ncount);
    const double phi0 = u0 * t0 / b;
    for (std::size_t k = 0; k < ncount; ++k) {
        const double mm = static_cast<double>(k);
        const double uk = u_grid.at(k);
        const cplx pre = std::polar(1.0, -(phi0 + du * t0 * mm / b + gamma * mm * mm));
        r.values[k] =
            std::polar(1.0, m.d() / (2.0 * b) * uk * uk) * pre * conv[k + mcount - 1];
    }
    return r;
}

LctResult lct_inverse(const LctResult& g, const SymplecticMatrix& m,
                      const AxisSpec& t_grid) {
    if (m.b() == 0.0) throw ZeroB("inverse LCT requires b != 0");
    const SymplecticMatrix inv = m.inverse();
    const double b = inv.b();
    const cplx kamp = kernel_amplitude(b);
    const double acoef = inv.a() / (2.0 * b);
    const std::size_t n = g.values.size();
    std::vector<double> x(n);
    std::vector<cplx> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = g.u_at(i);
        const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        q[i] = g.values[i] * kamp * (w * g.du) * std::polar(1.0, acoef * x[i] * x[i]);
    }
    LctResult out;
    out.u0 = t_grid.lo;
    out.du = t_grid.step();
    out.values = detail::dlt_sum(x, q, t_grid, b, inv.d() / (2.0 * b));
    return out;
}

} // namespace swdl
