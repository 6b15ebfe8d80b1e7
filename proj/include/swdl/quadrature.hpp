#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace swdl::quadrature {

/// 16-point Gauss-Legendre nodes and weights on [-1, 1].
inline constexpr int gl_order = 16;
extern const double gl_nodes[gl_order];
extern const double gl_weights[gl_order];

/// Composite Gauss-Legendre node/weight layout over [lo, hi] with `panels`
/// equal panels. Node count is panels * gl_order.
struct PanelNodes {
    std::vector<double> x;
    std::vector<double> w;
};

PanelNodes panel_nodes(double lo, double hi, int panels);

/// Panel count so the integrand phase advances at most ~pi per panel
/// (16-point panels resolve that with large margin), with extra panels when a
/// finite envelope scale needs them.
int oscillation_panels(double length, double max_phase_rate, double env_scale,
                       int min_panels);

/// Composite Gauss-Legendre integral of a complex-valued callable.
template <typename F>
std::complex<double> integrate(F&& f, double lo, double hi, int panels) {
    const PanelNodes pn = panel_nodes(lo, hi, panels);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < pn.x.size(); ++i) {
        acc += pn.w[i] * f(pn.x[i]);
    }
    return acc;
}

/// Trapezoid over a uniform lattice of `values` spaced by `step`.
template <typename T>
T trapezoid(const std::vector<T>& values, double step) {
    if (values.size() < 2) return T{};
    T acc = (values.front() + values.back()) * 0.5;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) acc += values[i];
    return acc * step;
}

} // namespace swdl::quadrature
