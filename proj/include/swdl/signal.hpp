#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "swdl/errors.hpp"

namespace swdl {

using cplx = std::complex<double>;

/// Closed real interval [lo, hi], lo < hi.
struct Interval {
    double lo;
    double hi;
    double length() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Intersection of two intervals; empty is signalled through the bool.
struct MaybeInterval {
    Interval iv{0.0, 0.0};
    bool nonempty = false;
};

MaybeInterval intersect(const Interval& x, const Interval& y);

/// Uniformly sampled complex signal; discrete carrier for externally supplied
/// data. Off-lattice values come from windowed-sinc interpolation (evaluate).
class SampledSignal {
  public:
    SampledSignal(double t0, double dt, std::vector<cplx> values);

    double t0() const { return t0_; }
    double dt() const { return dt_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<cplx>& values() const { return values_; }
    double t_at(std::size_t k) const { return t0_ + static_cast<double>(k) * dt_; }
    Interval span() const { return {t0_, t_at(values_.size() - 1)}; }

  private:
    double t0_;
    double dt_;
    std::vector<cplx> values_;
};

/// An evaluable complex signal of time. Analytic signals carry a closed-form
/// evaluator (quadratures never interpolate); sampled signals evaluate through
/// windowed-sinc interpolation. The metadata drives oscillation-aware
/// quadrature: `support` bounds every integral, `band` bounds the
/// instantaneous-frequency range, `env_scale` is the smallest envelope feature
/// scale (infinity for flat envelopes).
class Signal {
  public:
    using Evaluator = std::function<cplx(double)>;
    using PhaseDerivative = std::function<double(double)>;

    /// The zero signal on [-1, 1].
    Signal() : eval_([](double) { return cplx{0.0, 0.0}; }) {}

    static Signal analytic(Evaluator ev, Interval support, Interval band,
                           double env_scale,
                           PhaseDerivative phase_derivative = nullptr);
    static Signal from_samples(SampledSignal samples);

    cplx operator()(double t) const { return eval_(t); }

    const Interval& support() const { return support_; }
    const Interval& band() const { return band_; }
    double env_scale() const { return env_scale_; }
    bool is_sampled() const { return sampled_ != nullptr; }
    const SampledSignal* samples() const { return sampled_.get(); }

    bool has_phase_derivative() const { return static_cast<bool>(phase_derivative_); }
    /// Instantaneous frequency d(arg f)/dt. Analytic generators supply the
    /// closed form; sampled signals use unwrapped-phase central differences.
    double phase_derivative(double t) const;

    /// Largest |instantaneous frequency| over the support.
    double max_abs_frequency() const;

  private:
    Evaluator eval_;
    Interval support_{-1.0, 1.0};
    Interval band_{0.0, 0.0};
    double env_scale_ = 1.0;
    PhaseDerivative phase_derivative_;
    std::shared_ptr<const SampledSignal> sampled_;
};

/// Parameters of the Gaussian-envelope family
/// exp(-(t-t0)^2/(2 zeta) + epsilon) * exp(j [eta_m(t) (t-t0)^2/(2 xi) + omega0 t + varsigma]).
struct GaussianParams {
    double t0_center = 0.0; ///< envelope center (s)
    double zeta = 1.0;      ///< envelope width parameter (s^2), > 0
    double epsilon = 0.0;   ///< log-amplitude
    double omega0 = 0.0;    ///< carrier frequency (rad/s)
    double xi = 1.0;        ///< chirp width parameter (s^2), > 0 when chirped
    int m = 1;              ///< chirp sign profile: 1 -> +1, 2 -> -1, 3 -> sgn(t-t0), 4 -> -sgn(t-t0)
    double varsigma = 0.0;  ///< phase offset (rad)
};

/// Unit-magnitude chirp exp(j(alpha t + beta t^2)). Not square integrable on
/// the line; all computations are relative to the observation window, which
/// doubles as the declared support.
Signal lfm(double alpha, double beta, Interval window = {-5.0, 5.0});

/// Real positive Gaussian; uses t0_center, zeta, epsilon.
Signal gaussian(const GaussianParams& p);

/// Gaussian envelope with a complex exponential carrier; adds omega0, varsigma.
Signal gauss_exponential(const GaussianParams& p);

/// Gaussian envelope with a quadratic chirp of profile m in {1,2,3,4}.
Signal gauss_chirp(const GaussianParams& p);

SampledSignal sample(const Signal& f, double t0, double dt, std::size_t n);

/// Windowed-sinc (Kaiser, 16 taps per side) interpolation; exact at lattice
/// points, zero outside the sampled span.
cplx evaluate(const SampledSignal& s, double t);

// Convenience combinators (also used by the property suites).
namespace detail {
/// Kaiser-windowed sinc interpolation weights at fractional index x over a
/// lattice of n points; shared by sample interpolation and grid resampling.
void sinc_taps(double x, std::size_t n, std::size_t& i_begin,
               std::vector<double>& w);
} // namespace detail

Signal translate(const Signal& f, double theta);       ///< f(t - theta)
Signal modulate(const Signal& f, double xi);           ///< e^{j xi t} f(t)
Signal scale_signal(const Signal& f, double sigma);    ///< sqrt(sigma) f(sigma t)
Signal reverse(const Signal& f);                       ///< f(-t)
Signal conjugate(const Signal& f);                     ///< conj(f(t))
Signal add(const Signal& f, const Signal& g);          ///< f + g

} // namespace swdl
