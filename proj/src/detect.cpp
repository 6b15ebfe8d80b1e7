#include "swdl/detect.hpp"

#include <algorithm>
#include <cmath>

namespace swdl {

RadonMap radon(const TFGrid& grid, const AxisSpec& slopes,
               const AxisSpec& intercepts) {
    if (grid.nt == 0 || grid.nu == 0 || slopes.count == 0 || intercepts.count == 0) {
        throw EmptyGrid("radon needs non-empty grid and axis specs");
    }
    RadonMap m;
    m.slopes.resize(slopes.count);
    for (std::size_t i = 0; i < slopes.count; ++i) m.slopes[i] = slopes.at(i);
    m.intercepts.resize(intercepts.count);
    for (std::size_t i = 0; i < intercepts.count; ++i) {
        m.intercepts[i] = intercepts.at(i);
    }
    m.accum.assign(slopes.count * intercepts.count, 0.0);

    const double u_end = grid.u_at(grid.nu - 1);
    for (std::size_t is = 0; is < slopes.count; ++is) {
        const double s = m.slopes[is];
        double* row = &m.accum[is * intercepts.count];
        for (std::size_t it = 0; it < grid.nt; ++it) {
            const double base = s * grid.t_at(it);
            for (std::size_t ic = 0; ic < intercepts.count; ++ic) {
                const double u = base + m.intercepts[ic];
                if (u < grid.u0 || u > u_end) continue;
                const double x = (u - grid.u0) / grid.du;
                const auto i0 = static_cast<std::size_t>(x);
                const double frac = x - static_cast<double>(i0);
                const double lo = std::abs(grid.at(it, i0));
                const double hi =
                    i0 + 1 < grid.nu ? std::abs(grid.at(it, i0 + 1)) : lo;
                row[ic] += lo + frac * (hi - lo);
            }
        }
        for (std::size_t ic = 0; ic < intercepts.count; ++ic) row[ic] *= grid.dt;
    }
    return m;
}

RadonPeak radon_peak(const RadonMap& rmap) {
    RadonPeak p;
    for (std::size_t is = 0; is < rmap.slopes.size(); ++is) {
        for (std::size_t ic = 0; ic < rmap.intercepts.size(); ++ic) {
            const double v = rmap.at(is, ic);
            if (v > p.value) {
                p.value = v;
                p.slope = rmap.slopes[is];
                p.intercept = rmap.intercepts[ic];
            }
        }
    }
    return p;
}

RateAmplitude rate_distribution(const RadonMap& rmap, const SymplecticMatrix& a1,
                                const SymplecticMatrix& a2,
                                std::optional<double> alpha_known) {
    if (a2.b() == 0.0) throw ZeroB("rate map requires b2 != 0");
    const double scale = 2.0 * (a1.b() * a1.d() - a1.a() * a1.c()) * a2.b();
    if (scale == 0.0) {
        throw DegenerateMap("slope-to-rate map undefined: b1 d1 - a1 c1 = 0");
    }
    RateAmplitude r;
    const std::size_t ns = rmap.slopes.size();
    r.rates.resize(ns);
    r.amplitude.resize(ns);
    double total = 0.0;
    double peak = -1.0;
    std::size_t peak_idx = 0;
    for (std::size_t is = 0; is < ns; ++is) {
        r.rates[is] = rmap.slopes[is] / scale;
        double best = 0.0;
        for (std::size_t ic = 0; ic < rmap.intercepts.size(); ++ic) {
            best = std::max(best, rmap.at(is, ic));
        }
        r.amplitude[is] = best;
        total += best;
        if (best > peak) {
            peak = best;
            peak_idx = is;
        }
    }
    r.peak_rate = r.rates[peak_idx];
    const double mean = total / static_cast<double>(ns);
    r.peak_to_mean = mean > 0.0 ? peak / mean : 0.0;
    if (alpha_known) {
        r.expected_intercept = *alpha_known * (a1.d() - a1.c()) * a2.b();
    }
    return r;
}

MethodComparison compare_methods(const Signal& f, const SymplecticMatrix& a1,
                                 const SymplecticMatrix& a2,
                                 const AxisSpec& t_grid, const AxisSpec& u_grid,
                                 const AxisSpec& slopes,
                                 std::optional<double> alpha_known) {
    const AxisSpec intercepts = u_grid;
    const SymplecticMatrix wd1 = matrices::wd_a1();
    const SymplecticMatrix l1 = matrices::l1();
    const std::pair<std::string, std::pair<SymplecticMatrix, SymplecticMatrix>>
        setups[] = {{"SWDL", {a1, a2}},
                    {"SWD", {a1, l1}},
                    {"WDL", {wd1, a2}},
                    {"WD", {wd1, l1}}};
    MethodComparison cmp;
    for (const auto& [name, ms] : setups) {
        MethodResult mr;
        mr.name = name;
        mr.grid = swdl_definition(f, ms.first, ms.second, t_grid, u_grid);
        mr.rmap = radon(mr.grid, slopes, intercepts);
        mr.rates = rate_distribution(mr.rmap, ms.first, ms.second, alpha_known);
        mr.peak_rate = mr.rates.peak_rate;
        mr.peak_to_mean = mr.rates.peak_to_mean;
        double mass = 0.0;
        for (const auto& v : mr.grid.values) mass += std::abs(v);
        mass *= mr.grid.dt * mr.grid.du;
        const RadonPeak p = radon_peak(mr.rmap);
        mr.normalized_peak = mass > 0.0 ? p.value / mass : 0.0;
        cmp.methods.push_back(std::move(mr));
    }
    return cmp;
}

} // namespace swdl
