#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "swdl/detect.hpp"

using namespace swdl;

namespace {

const SymplecticMatrix kA1{2.0, 2.0, -0.25, 0.25};
const SymplecticMatrix kA2{0.0, 0.5, -2.0, 1.0};

// grid with |W| = 1 exactly on u = slope*t + intercept (lattice-aligned)
TFGrid ridge_fixture(double slope, double intercept) {
    TFGrid g;
    g.t0 = -5.0;
    g.dt = 0.1;
    g.nt = 101;
    g.u0 = -5.0;
    g.du = 0.05;
    g.nu = 201;
    g.values.assign(g.nt * g.nu, cplx{0.0, 0.0});
    for (std::size_t it = 0; it < g.nt; ++it) {
        const double u = slope * g.t_at(it) + intercept;
        const double x = (u - g.u0) / g.du;
        const auto iu = static_cast<std::ptrdiff_t>(std::lround(x));
        if (iu >= 0 && iu < static_cast<std::ptrdiff_t>(g.nu)) {
            g.at(it, static_cast<std::size_t>(iu)) = cplx{1.0, 0.0};
        }
    }
    return g;
}

const AxisSpec kSlopes{0.0, 2.0, 101};
const AxisSpec kIntercepts{-5.0, 5.0, 201};

} // namespace

TEST_CASE("synthetic ridge localizes at its slope and intercept") {
    const TFGrid g = ridge_fixture(0.5, 0.25);
    const RadonMap m = radon(g, kSlopes, kIntercepts);
    const RadonPeak p = radon_peak(m);
    CHECK(p.slope == doctest::Approx(0.5));
    CHECK(p.intercept == doctest::Approx(0.25));
    // full-length accumulation: 101 samples of 1 scaled by dt
    CHECK(p.value == doctest::Approx(101.0 * 0.1));
}

TEST_CASE("uniform and zero grids") {
    TFGrid g = ridge_fixture(0.0, 0.0);
    std::fill(g.values.begin(), g.values.end(), cplx{1.0, 0.0});
    const AxisSpec inner_slopes{0.0, 0.1, 5};
    const AxisSpec inner_intercepts{-1.0, 1.0, 21};
    const RadonMap m = radon(g, inner_slopes, inner_intercepts);
    // away from clipping, every line integrates the same mass
    for (std::size_t is = 0; is < m.slopes.size(); ++is) {
        for (std::size_t ic = 0; ic < m.intercepts.size(); ++ic) {
            CHECK(m.at(is, ic) == doctest::Approx(101.0 * 0.1).epsilon(1e-12));
        }
    }

    std::fill(g.values.begin(), g.values.end(), cplx{0.0, 0.0});
    const RadonMap z = radon(g, kSlopes, kIntercepts);
    for (const double v : z.accum) CHECK(v == 0.0);
}

TEST_CASE("radon is positively homogeneous") {
    const TFGrid g = ridge_fixture(0.7, -0.35);
    TFGrid g3 = g;
    for (auto& v : g3.values) v *= 3.0;
    const RadonMap m1 = radon(g, kSlopes, kIntercepts);
    const RadonMap m3 = radon(g3, kSlopes, kIntercepts);
    for (std::size_t i = 0; i < m1.accum.size(); ++i) {
        CHECK(m3.accum[i] == doctest::Approx(3.0 * m1.accum[i]).epsilon(1e-13));
    }
}

TEST_CASE("intercept shifts move the argmax accordingly") {
    const RadonMap base = radon(ridge_fixture(0.5, 0.0), kSlopes, kIntercepts);
    const RadonMap moved = radon(ridge_fixture(0.5, 0.25), kSlopes, kIntercepts);
    const double step = kIntercepts.step();
    CHECK(std::abs((radon_peak(moved).intercept - radon_peak(base).intercept) -
                   0.25) <= step + 1e-12);
}

TEST_CASE("empty inputs are rejected") {
    TFGrid g;
    CHECK_THROWS_AS(radon(g, kSlopes, kIntercepts), EmptyGrid);
}

TEST_CASE("slope-to-rate map") {
    const TFGrid g = ridge_fixture(0.5, 0.25);
    const RadonMap m = radon(g, kSlopes, kIntercepts);
    // 2 (b1 d1 - a1 c1) b2 = 1 for the reference matrices
    const RateAmplitude r = rate_distribution(m, kA1, kA2, 1.0);
    CHECK(r.peak_rate == doctest::Approx(0.5));
    CHECK(r.rates.front() == doctest::Approx(0.0));
    CHECK(r.rates.back() == doctest::Approx(2.0));
    REQUIRE(r.expected_intercept.has_value());
    CHECK(*r.expected_intercept == doctest::Approx(0.25));
    CHECK(r.peak_to_mean > 1.0);

    // classical matrices: rate = slope / 2
    const RateAmplitude wd =
        rate_distribution(m, matrices::wd_a1(), matrices::l1(), std::nullopt);
    CHECK(wd.rates.back() == doctest::Approx(1.0));

    // degenerate geometry: b1 d1 = a1 c1
    const auto degenerate = validate(2.0, 1.0, 1.0 / 3.0, 2.0 / 3.0);
    CHECK_THROWS_AS(rate_distribution(m, degenerate, kA2, std::nullopt),
                    DegenerateMap);
}

TEST_CASE("peak concentration degrades as the impulse condition is violated") {
    const Signal f = lfm(1.0, 0.5);
    const auto a1 = optimal_a1(2.0, 1.0);
    const double b2 = 0.5, d2 = 1.0;
    const double matched_a2 =
        -2.0 * 0.5 * (a1.d() * a1.d() - a1.c() * a1.c()) * b2;
    const AxisSpec taxis{-5.0, 5.0, 101};
    const AxisSpec uaxis{-5.0, 5.0, 201};
    double previous = std::numeric_limits<double>::infinity();
    for (const double margin : {0.0, 0.05, 0.1, 0.2, 0.4}) {
        const double a2e = matched_a2 + margin;
        const auto a2 = validate(a2e, b2, (a2e * d2 - 1.0) / b2, d2);
        const TFGrid w = swdl_definition(f, a1, a2, taxis, uaxis);
        const RadonMap m = radon(w, kSlopes, uaxis);
        const RateAmplitude r = rate_distribution(m, a1, a2, 1.0);
        CHECK(r.peak_to_mean < previous);
        previous = r.peak_to_mean;
    }
}

TEST_CASE("four-method comparison on a matched chirp") {
    const Signal f = lfm(1.0, 0.5);
    const AxisSpec taxis{-5.0, 5.0, 101};
    const AxisSpec uaxis{-5.0, 5.0, 201};
    const MethodComparison cmp =
        compare_methods(f, kA1, kA2, taxis, uaxis, kSlopes, 1.0);
    REQUIRE(cmp.methods.size() == 4);
    CHECK(cmp.methods[0].name == "SWDL");
    CHECK(cmp.methods[3].name == "WD");
    for (const auto& m : cmp.methods) {
        const double rate_step = m.rates.rates[1] - m.rates.rates[0];
        CHECK(std::abs(m.peak_rate - 0.5) <= rate_step + 1e-12);
    }
    // |b2| = 1/2 separates the LCT-kernel methods from the Fourier-kernel ones
    CHECK(cmp.methods[0].peak_to_mean > cmp.methods[1].peak_to_mean); // SWD
    CHECK(cmp.methods[0].peak_to_mean > cmp.methods[3].peak_to_mean); // WD
    // the symplectic-coordinate axis concentrates |W| per unit mass instead
    CHECK(cmp.methods[0].normalized_peak > cmp.methods[2].normalized_peak);

    const MethodComparison zero = compare_methods(
        Signal{}, kA1, kA2, taxis, uaxis, kSlopes, std::nullopt);
    for (const auto& m : zero.methods) {
        for (const double v : m.rates.amplitude) CHECK(v == 0.0);
    }
}
