#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "swdl/lct.hpp"
#include "swdl/quadrature.hpp"

using namespace swdl;

namespace {

double l2_norm(const LctResult& r) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        const double w = (i == 0 || i + 1 == r.values.size()) ? 0.5 : 1.0;
        acc += w * std::norm(r.values[i]);
    }
    return std::sqrt(acc * r.du);
}

double rel_l2_diff(const LctResult& x, const LctResult& y) {
    REQUIRE(x.values.size() == y.values.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        num += std::norm(x.values[i] - y.values[i]);
        den += std::norm(x.values[i]);
    }
    return std::sqrt(num / den);
}

} // namespace

TEST_CASE("kernel closed-form spot values") {
    const auto l1 = matrices::l1();
    const cplx k00 = lct_kernel(l1, 0.0, 0.0);
    const cplx expected = std::polar(1.0 / std::sqrt(2.0 * M_PI), -M_PI / 4.0);
    CHECK(std::abs(k00 - expected) < 1e-15);

    // Fourier correspondence: kernel(L1, u, t) = (1/sqrt(j 2 pi)) e^{-j u t}
    for (double u : {-2.0, 0.3, 1.7}) {
        for (double t : {-1.1, 0.0, 2.9}) {
            const cplx want = expected * std::polar(1.0, -u * t);
            CHECK(std::abs(lct_kernel(l1, u, t) - want) < 1e-14);
        }
    }

    const auto a2 = validate(0.0, 0.5, -2.0, 1.0);
    const cplx k11 = lct_kernel(a2, 1.0, 1.0);
    const cplx want =
        std::polar(1.0 / std::sqrt(M_PI), -M_PI / 4.0) * std::polar(1.0, -1.0);
    CHECK(std::abs(k11 - want) < 1e-14);

    CHECK_THROWS_AS(lct_kernel(validate(1.0, 0.0, 0.5, 1.0), 0.0, 0.0), ZeroB);
}

TEST_CASE("kernel magnitude is 1/sqrt(2 pi |b|)") {
    oracles::MatrixSampler sampler(7);
    for (int i = 0; i < 100; ++i) {
        const auto m = sampler.a2_kernel();
        const double u = sampler.uniform(-5.0, 5.0);
        const double t = sampler.uniform(-5.0, 5.0);
        const double mag = std::abs(lct_kernel(m, u, t));
        CHECK(std::abs(mag - 1.0 / std::sqrt(2.0 * M_PI * std::abs(m.b()))) < 1e-14);
    }
}

TEST_CASE("gaussian transforms to the closed-form spectrum") {
    const Signal g = gaussian({});
    const AxisSpec axis{-8.0, 8.0, 641};
    const LctResult r = lct_quadrature(g, matrices::l1(), axis);
    const cplx sj = std::sqrt(cplx{0.0, 1.0});
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        const double w = r.u_at(i);
        CHECK(std::abs(sj * r.values[i] - std::exp(-w * w / 2.0)) < 1e-8);
    }
}

TEST_CASE("Fresnel-type matrix against a dense quadrature oracle") {
    const Signal g = gaussian({});
    const auto fresnel = validate(1.0, 1.0, 0.0, 1.0);
    const AxisSpec axis{-6.0, 6.0, 25};
    const LctResult r = lct_quadrature(g, fresnel, axis);
    // oracle: plain Simpson at a node count far beyond the adaptive choice
    for (std::size_t i = 0; i < axis.count; i += 4) {
        const double u = axis.at(i);
        const cplx want = oracles::simpson(
            [&](double t) { return g(t) * lct_kernel(fresnel, u, t); },
            g.support().lo, g.support().hi, 60000);
        CHECK(std::abs(r.values[i] - want) < 1e-6);
    }
}

TEST_CASE("unitarity over random matrices") {
    const Signal g = gaussian({});
    const double energy = oracles::simpson_real(
        [&](double t) { return std::norm(g(t)); }, -8.0, 8.0);
    const double signal_norm = std::sqrt(energy);
    oracles::MatrixSampler sampler(19);
    for (int i = 0; i < 20; ++i) {
        const double b = sampler.pick(0.1, 10.0);
        const double a = sampler.uniform(-1.5, 1.5);
        const double d = sampler.uniform(-1.5, 1.5);
        const double c = (a * d - 1.0) / b;
        const auto m = validate(a, b, c, d);
        const double half = std::abs(a) * 8.0 + std::abs(b) * 8.0 + 1.0;
        const AxisSpec axis{-half, half, 2001};
        const LctResult r = lct_quadrature(g, m, axis);
        CHECK(l2_norm(r) == doctest::Approx(signal_norm).epsilon(1e-6));
    }
}

TEST_CASE("fast path agrees with quadrature") {
    const Signal g = gaussian({});
    const SampledSignal s = sample(g, -5.0, 0.05, 201);
    const AxisSpec axis{-6.0, 6.0, 301};
    const LctResult fast = lct_fast(s, matrices::l1(), axis);
    const LctResult ref = lct_quadrature(g, matrices::l1(), axis);
    CHECK(rel_l2_diff(ref, fast) < 1e-4);
    CHECK_FALSE(fast.alias_risk);

    const auto a2 = validate(0.0, 0.5, -2.0, 1.0);
    const LctResult fast2 = lct_fast(s, a2, axis);
    const LctResult ref2 = lct_quadrature(g, a2, axis);
    CHECK(rel_l2_diff(ref2, fast2) < 1e-4);

    CHECK_THROWS_AS(lct_fast(s, validate(1.0, 0.0, 0.5, 1.0), axis), ZeroB);
}

TEST_CASE("fast path preserves energy of a narrow pulse") {
    const Signal g = gaussian({.zeta = 0.02});
    const SampledSignal s = sample(g, -1.5, 0.005, 601);
    const AxisSpec axis{-40.0, 40.0, 4001};
    const LctResult r = lct_fast(s, matrices::l1(), axis);
    const double energy = oracles::simpson_real(
        [&](double t) { return std::norm(g(t)); }, -1.5, 1.5);
    CHECK(l2_norm(r) == doctest::Approx(std::sqrt(energy)).epsilon(1e-4));
}

TEST_CASE("alias risk is flagged for undersampled chirps") {
    const Signal g = gaussian({});
    const SampledSignal coarse = sample(g, -5.0, 0.5, 21);
    const auto strong_chirp = validate(8.0, 0.1, -10.0, 0.0);
    const AxisSpec axis{-6.0, 6.0, 64};
    CHECK(lct_fast(coarse, strong_chirp, axis).alias_risk);
}

TEST_CASE("inverse round trips") {
    const Signal g = gaussian({});
    const auto a2 = validate(0.0, 0.5, -2.0, 1.0);
    const AxisSpec uaxis{-5.0, 5.0, 801};
    const AxisSpec taxis{-4.0, 4.0, 161};
    const LctResult fwd = lct_quadrature(g, a2, uaxis);
    const LctResult back = lct_inverse(fwd, a2, taxis);
    for (std::size_t i = 0; i < taxis.count; ++i) {
        CHECK(std::abs(back.values[i] - g(back.u_at(i))) < 1e-6);
    }

    const Signal chirp = gauss_chirp({.m = 1});
    const LctResult fwd2 = lct_quadrature(chirp, a2, AxisSpec{-8.0, 8.0, 1601});
    const LctResult back2 = lct_inverse(fwd2, a2, taxis);
    for (std::size_t i = 0; i < taxis.count; ++i) {
        CHECK(std::abs(back2.values[i] - chirp(back2.u_at(i))) < 1e-5);
    }

    // Fourier special case
    const LctResult ft = lct_quadrature(g, matrices::l1(), uaxis);
    const LctResult back3 = lct_inverse(ft, matrices::l1(), taxis);
    for (std::size_t i = 0; i < taxis.count; ++i) {
        CHECK(std::abs(back3.values[i] - g(back3.u_at(i))) < 1e-6);
    }
}

TEST_CASE("composition matches the matrix product up to a constant phase") {
    const Signal g = gaussian({});
    const auto first = validate(1.0, 0.5, -1.0, 0.5);
    const auto second = validate(0.5, 1.0, -1.0, 0.0);
    const Mat2 prod = mul(as_mat2(second), as_mat2(first));
    const auto combined = validate(prod.a, prod.b, prod.c, prod.d);

    const AxisSpec mid{-10.0, 10.0, 4001};
    const LctResult stage = lct_quadrature(g, first, mid);
    const Signal staged = Signal::from_samples(
        SampledSignal(stage.u0, stage.du, stage.values));
    const AxisSpec axis{-5.0, 5.0, 41};
    const LctResult two_step = lct_quadrature(staged, second, axis);
    const LctResult one_step = lct_quadrature(g, combined, axis);
    for (std::size_t i = 0; i < axis.count; ++i) {
        CHECK(std::abs(std::abs(two_step.values[i]) - std::abs(one_step.values[i])) <
              1e-5);
    }
}

TEST_CASE("infinite support is rejected") {
    const double inf = std::numeric_limits<double>::infinity();
    const Signal f = Signal::analytic(
        [](double) { return cplx{1.0, 0.0}; }, Interval{-inf, inf},
        Interval{0.0, 0.0}, inf);
    CHECK_THROWS_AS(lct_quadrature(f, matrices::l1(), AxisSpec{-1.0, 1.0, 11}),
                    UnboundedSupport);
}

TEST_CASE("b = 0 dispatches to the scaling-chirp form") {
    const Signal g = gaussian({});
    const auto m = validate(2.0, 0.0, 0.5, 0.5);
    const AxisSpec axis{-3.0, 3.0, 61};
    const LctResult r = lct_quadrature(g, m, axis);
    for (std::size_t i = 0; i < axis.count; ++i) {
        const double u = axis.at(i);
        const cplx want = std::sqrt(cplx(0.5, 0.0)) *
                          std::polar(1.0, 0.5 * 0.5 * u * u / 2.0) * g(0.5 * u);
        CHECK(std::abs(r.values[i] - want) < 1e-12);
    }
}
