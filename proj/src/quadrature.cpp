#include "swdl/quadrature.hpp"

#include <algorithm>

namespace swdl::quadrature {

// Abscissae/weights for 16-point Gauss-Legendre on [-1,1].
const double gl_nodes[gl_order] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
    -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
    -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
    0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
    0.9894009349916499};
const double gl_weights[gl_order] = {
    0.0271524594117540, 0.0622535239386479, 0.0951585116824928,
    0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
    0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
    0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
    0.0271524594117540};

PanelNodes panel_nodes(double lo, double hi, int panels) {
    PanelNodes pn;
    pn.x.resize(static_cast<std::size_t>(panels) * gl_order);
    pn.w.resize(pn.x.size());
    const double h = (hi - lo) / panels;
    std::size_t k = 0;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * h;
        for (int i = 0; i < gl_order; ++i, ++k) {
            pn.x[k] = mid + 0.5 * h * gl_nodes[i];
            pn.w[k] = 0.5 * h * gl_weights[i];
        }
    }
    return pn;
}

int oscillation_panels(double length, double max_phase_rate, double env_scale,
                       int min_panels) {
    const double by_phase = length * max_phase_rate / M_PI;
    double by_env = 0.0;
    if (std::isfinite(env_scale) && env_scale > 0.0) {
        by_env = length / (1.5 * env_scale);
    }
    const double need = std::max(by_phase, by_env);
    const int panels = static_cast<int>(std::ceil(need)) + 1;
    return std::max(min_panels, panels);
}

} // namespace swdl::quadrature
