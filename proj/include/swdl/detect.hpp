#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swdl/tfd.hpp"

namespace swdl {

/// Line integrals of |W| over u = slope * t + intercept.
struct RadonMap {
    std::vector<double> slopes;
    std::vector<double> intercepts;
    std::vector<double> accum; ///< row-major, index [slope][intercept]

    double at(std::size_t is, std::size_t ic) const {
        return accum[is * intercepts.size() + ic];
    }
};

/// Accumulate |W(t, s t + c)| along the t lattice with linear interpolation in
/// u, scaled by dt; points falling outside the u range contribute zero.
RadonMap radon(const TFGrid& grid, const AxisSpec& slopes,
               const AxisSpec& intercepts);

/// Frequency-rate / amplitude curve derived from a Radon map through the
/// slope-to-rate map rate = slope / (2 (b1 d1 - a1 c1) b2).
struct RateAmplitude {
    std::vector<double> rates;
    std::vector<double> amplitude; ///< max over intercepts per slope
    double peak_rate = 0.0;
    double peak_to_mean = 0.0;
    std::optional<double> expected_intercept; ///< alpha (d1 - c1) b2 when alpha known
};

RateAmplitude rate_distribution(const RadonMap& rmap, const SymplecticMatrix& a1,
                                const SymplecticMatrix& a2,
                                std::optional<double> alpha_known = std::nullopt);

/// Argmax cell of the accumulator.
struct RadonPeak {
    double slope = 0.0;
    double intercept = 0.0;
    double value = 0.0;
};

RadonPeak radon_peak(const RadonMap& rmap);

struct MethodResult {
    std::string name;
    TFGrid grid;
    RadonMap rmap;
    RateAmplitude rates;
    double peak_rate = 0.0;
    double peak_to_mean = 0.0;
    double normalized_peak = 0.0; ///< peak accumulation / total |W| mass
};

struct MethodComparison {
    std::vector<MethodResult> methods; ///< SWDL, SWD, WDL, WD in that order
};

/// Four-way comparison on identical axes: SWDL(A1,A2), SWD(A1), WDL(A2), WD.
MethodComparison compare_methods(const Signal& f, const SymplecticMatrix& a1,
                                 const SymplecticMatrix& a2,
                                 const AxisSpec& t_grid, const AxisSpec& u_grid,
                                 const AxisSpec& slopes,
                                 std::optional<double> alpha_known = std::nullopt);

} // namespace swdl
