#include "swdl/signal.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace swdl {

namespace {

constexpr double kSupportFloorLog = 27.631021115928547; // -ln(1e-12)

double kaiser_i0(double x) {
    // modified Bessel I0 by its power series; converges fast for |x| <= ~30
    static const auto inv_k2 = [] {
        std::array<double, 64> t{};
        for (int k = 1; k < 64; ++k) t[k] = 1.0 / (static_cast<double>(k) * k);
        return t;
    }();
    double sum = 1.0;
    double term = 1.0;
    const double q = x * x / 4.0;
    for (int k = 1; k < 64; ++k) {
        term *= q * inv_k2[k];
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

} // namespace

MaybeInterval intersect(const Interval& x, const Interval& y) {
    const double lo = std::max(x.lo, y.lo);
    const double hi = std::min(x.hi, y.hi);
    if (lo >= hi) return {};
    return {{lo, hi}, true};
}

SampledSignal::SampledSignal(double t0, double dt, std::vector<cplx> values)
    : t0_(t0), dt_(dt), values_(std::move(values)) {
    if (dt_ <= 0.0) throw InvalidWidth("sample period dt must be > 0");
    if (values_.empty()) throw DegenerateInput("sampled signal must be non-empty");
}

Signal Signal::analytic(Evaluator ev, Interval support, Interval band,
                        double env_scale, PhaseDerivative phase_derivative) {
    if (!(support.lo < support.hi)) {
        throw DegenerateInput("signal support interval must be non-empty");
    }
    Signal s;
    s.eval_ = std::move(ev);
    s.support_ = support;
    s.band_ = band;
    s.env_scale_ = env_scale;
    s.phase_derivative_ = std::move(phase_derivative);
    return s;
}

Signal Signal::from_samples(SampledSignal samples) {
    auto holder = std::make_shared<const SampledSignal>(std::move(samples));
    Signal s;
    s.eval_ = [holder](double t) { return evaluate(*holder, t); };
    s.support_ = holder->span();
    const double nyq = M_PI / holder->dt();
    s.band_ = {-nyq, nyq};
    s.env_scale_ = 4.0 * holder->dt();
    s.sampled_ = holder;
    return s;
}

double Signal::phase_derivative(double t) const {
    if (phase_derivative_) return phase_derivative_(t);
    if (sampled_) {
        // unwrapped central difference on the lattice nearest to t
        const auto& s = *sampled_;
        const double dt = s.dt();
        auto idx = static_cast<std::ptrdiff_t>(std::lround((t - s.t0()) / dt));
        idx = std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(s.size()) - 1);
        const auto lo = static_cast<std::size_t>(std::max<std::ptrdiff_t>(idx - 1, 0));
        const auto hi = static_cast<std::size_t>(
            std::min<std::ptrdiff_t>(idx + 1, static_cast<std::ptrdiff_t>(s.size()) - 1));
        if (lo == hi) return 0.0;
        const cplx a = s.values()[lo];
        const cplx b = s.values()[hi];
        if (std::abs(a) == 0.0 || std::abs(b) == 0.0) return 0.0;
        double dphi = std::arg(b) - std::arg(a);
        // wrap to (-pi, pi] per step pair
        dphi = std::remainder(dphi, 2.0 * M_PI);
        return dphi / (static_cast<double>(hi - lo) * dt);
    }
    throw DegenerateInput("signal carries no phase derivative");
}

double Signal::max_abs_frequency() const {
    return std::max(std::abs(band_.lo), std::abs(band_.hi));
}

Signal lfm(double alpha, double beta, Interval window) {
    const double f_lo = alpha + 2.0 * beta * window.lo;
    const double f_hi = alpha + 2.0 * beta * window.hi;
    return Signal::analytic(
        [alpha, beta](double t) {
            return std::polar(1.0, alpha * t + beta * t * t);
        },
        window, {std::min(f_lo, f_hi), std::max(f_lo, f_hi)},
        std::numeric_limits<double>::infinity(),
        [alpha, beta](double t) { return alpha + 2.0 * beta * t; });
}

namespace {

void check_widths(const GaussianParams& p, bool chirped) {
    if (p.zeta <= 0.0) throw InvalidWidth("envelope width zeta must be > 0");
    if (chirped && p.xi <= 0.0) throw InvalidWidth("chirp width xi must be > 0");
}

Interval gauss_support(const GaussianParams& p) {
    const double half = std::sqrt(2.0 * kSupportFloorLog * p.zeta);
    return {p.t0_center - half, p.t0_center + half};
}

double gauss_env_bandwidth(const GaussianParams& p) {
    // |F env| ~ exp(-zeta w^2 / 2); same 1e-12 cutoff as in time
    return std::sqrt(2.0 * kSupportFloorLog / p.zeta);
}

double chirp_sign(int m, double x) {
    switch (m) {
        case 1: return 1.0;
        case 2: return -1.0;
        case 3: return x >= 0.0 ? 1.0 : -1.0;
        case 4: return x >= 0.0 ? -1.0 : 1.0;
        default: throw DegenerateInput("chirp profile m must be in {1,2,3,4}");
    }
}

} // namespace

Signal gaussian(const GaussianParams& p) {
    check_widths(p, false);
    const double t0 = p.t0_center, zeta = p.zeta, eps = p.epsilon;
    const double bw = gauss_env_bandwidth(p);
    return Signal::analytic(
        [t0, zeta, eps](double t) {
            const double x = t - t0;
            return cplx(std::exp(-x * x / (2.0 * zeta) + eps), 0.0);
        },
        gauss_support(p), {-bw, bw}, std::sqrt(zeta),
        [](double) { return 0.0; });
}

Signal gauss_exponential(const GaussianParams& p) {
    check_widths(p, false);
    const double t0 = p.t0_center, zeta = p.zeta, eps = p.epsilon;
    const double w0 = p.omega0, vs = p.varsigma;
    const double bw = gauss_env_bandwidth(p);
    return Signal::analytic(
        [t0, zeta, eps, w0, vs](double t) {
            const double x = t - t0;
            return std::polar(std::exp(-x * x / (2.0 * zeta) + eps), w0 * t + vs);
        },
        gauss_support(p), {w0 - bw, w0 + bw}, std::sqrt(zeta),
        [w0](double) { return w0; });
}

Signal gauss_chirp(const GaussianParams& p) {
    check_widths(p, true);
    const double t0 = p.t0_center, zeta = p.zeta, eps = p.epsilon;
    const double w0 = p.omega0, xi = p.xi, vs = p.varsigma;
    const int m = p.m;
    if (m < 1 || m > 4) throw DegenerateInput("chirp profile m must be in {1,2,3,4}");
    const Interval supp = gauss_support(p);
    const double bw = gauss_env_bandwidth(p);
    const double half = supp.hi - t0;
    // instantaneous frequency omega0 + eta_m(t)(t-t0)/xi spans +-half/xi
    const Interval band{w0 - half / xi - bw, w0 + half / xi + bw};
    return Signal::analytic(
        [t0, zeta, eps, w0, xi, vs, m](double t) {
            const double x = t - t0;
            const double phase =
                chirp_sign(m, x) * x * x / (2.0 * xi) + w0 * t + vs;
            return std::polar(std::exp(-x * x / (2.0 * zeta) + eps), phase);
        },
        supp, band, std::sqrt(zeta),
        [t0, w0, xi, m](double t) {
            const double x = t - t0;
            return chirp_sign(m, x) * x / xi + w0;
        });
}

SampledSignal sample(const Signal& f, double t0, double dt, std::size_t n) {
    if (dt <= 0.0) throw InvalidWidth("sample period dt must be > 0");
    if (n == 0) throw DegenerateInput("sample count must be >= 1");
    std::vector<cplx> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = f(t0 + static_cast<double>(k) * dt);
    }
    return SampledSignal(t0, dt, std::move(v));
}

namespace detail {

// Kaiser-windowed sinc interpolation weights at fractional index x over a
// lattice of n points, 16 taps per side. Exact at lattice points.
void sinc_taps(double x, std::size_t n, std::size_t& i_begin,
               std::vector<double>& w) {
    constexpr int taps = 16;
    constexpr double beta = 12.0;
    const double xr = std::round(x);
    if (std::abs(x - xr) < 1e-12) {
        i_begin = static_cast<std::size_t>(xr);
        w.assign(1, 1.0);
        return;
    }
    const auto lo = std::max<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(std::floor(x)) - (taps - 1), 0);
    const auto hi = std::min<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(std::floor(x)) + taps,
        static_cast<std::ptrdiff_t>(n) - 1);
    static const double i0b = kaiser_i0(beta);
    i_begin = static_cast<std::size_t>(lo);
    w.resize(static_cast<std::size_t>(hi - lo + 1));
    // sin(pi (x - k)) only alternates sign across taps
    double s = std::sin(M_PI * (x - static_cast<double>(lo)));
    for (std::ptrdiff_t k = lo; k <= hi; ++k) {
        const double d = x - static_cast<double>(k);
        const double y = d / taps;
        const double win =
            kaiser_i0(beta * std::sqrt(std::max(0.0, 1.0 - y * y))) / i0b;
        w[static_cast<std::size_t>(k - lo)] = s / (M_PI * d) * win;
        s = -s;
    }
}

} // namespace detail

cplx evaluate(const SampledSignal& s, double t) {
    const double x = (t - s.t0()) / s.dt();
    if (x < 0.0 || x > static_cast<double>(s.size() - 1)) return {0.0, 0.0};
    std::size_t i_begin = 0;
    std::vector<double> w;
    detail::sinc_taps(x, s.size(), i_begin, w);
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < w.size(); ++k) {
        acc += s.values()[i_begin + k] * w[k];
    }
    return acc;
}

Signal translate(const Signal& f, double theta) {
    Signal base = f;
    const Interval supp{f.support().lo + theta, f.support().hi + theta};
    const bool has_pd = f.has_phase_derivative();
    return Signal::analytic(
        [base, theta](double t) { return base(t - theta); }, supp, f.band(),
        f.env_scale(),
        has_pd ? Signal::PhaseDerivative([base, theta](double t) {
            return base.phase_derivative(t - theta);
        })
               : Signal::PhaseDerivative(nullptr));
}

Signal modulate(const Signal& f, double xi) {
    Signal base = f;
    const Interval band{f.band().lo + xi, f.band().hi + xi};
    const bool has_pd = f.has_phase_derivative();
    return Signal::analytic(
        [base, xi](double t) { return std::polar(1.0, xi * t) * base(t); },
        f.support(), band, f.env_scale(),
        has_pd ? Signal::PhaseDerivative([base, xi](double t) {
            return base.phase_derivative(t) + xi;
        })
               : Signal::PhaseDerivative(nullptr));
}

Signal scale_signal(const Signal& f, double sigma) {
    if (sigma <= 0.0) throw DegenerateInput("scaling factor sigma must be > 0");
    Signal base = f;
    const Interval supp{f.support().lo / sigma, f.support().hi / sigma};
    const Interval band{f.band().lo * sigma, f.band().hi * sigma};
    const double amp = std::sqrt(sigma);
    const bool has_pd = f.has_phase_derivative();
    return Signal::analytic(
        [base, sigma, amp](double t) { return amp * base(sigma * t); }, supp, band,
        f.env_scale() / sigma,
        has_pd ? Signal::PhaseDerivative([base, sigma](double t) {
            return sigma * base.phase_derivative(sigma * t);
        })
               : Signal::PhaseDerivative(nullptr));
}

Signal reverse(const Signal& f) {
    Signal base = f;
    const Interval supp{-f.support().hi, -f.support().lo};
    const Interval band{-f.band().hi, -f.band().lo};
    const bool has_pd = f.has_phase_derivative();
    return Signal::analytic(
        [base](double t) { return base(-t); }, supp, band, f.env_scale(),
        has_pd ? Signal::PhaseDerivative([base](double t) {
            return -base.phase_derivative(-t);
        })
               : Signal::PhaseDerivative(nullptr));
}

Signal conjugate(const Signal& f) {
    Signal base = f;
    const Interval band{-f.band().hi, -f.band().lo};
    const bool has_pd = f.has_phase_derivative();
    return Signal::analytic(
        [base](double t) { return std::conj(base(t)); }, f.support(), band,
        f.env_scale(),
        has_pd ? Signal::PhaseDerivative([base](double t) {
            return -base.phase_derivative(t);
        })
               : Signal::PhaseDerivative(nullptr));
}

Signal add(const Signal& f, const Signal& g) {
    Signal bf = f, bg = g;
    const Interval supp{std::min(f.support().lo, g.support().lo),
                        std::max(f.support().hi, g.support().hi)};
    const Interval band{std::min(f.band().lo, g.band().lo),
                        std::max(f.band().hi, g.band().hi)};
    return Signal::analytic([bf, bg](double t) { return bf(t) + bg(t); }, supp,
                            band, std::min(f.env_scale(), g.env_scale()));
}

} // namespace swdl
