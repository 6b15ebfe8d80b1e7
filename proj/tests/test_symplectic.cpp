#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "swdl/symplectic.hpp"

using namespace swdl;

TEST_CASE("validate accepts unit-determinant matrices") {
    const auto m = validate(2.0, 2.0, -0.25, 0.25);
    CHECK(m.a() == 2.0);
    CHECK(m.det() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_NOTHROW(validate(1.0, 0.0, 0.0, 1.0));
}

TEST_CASE("validate rejects singular and non-finite input") {
    CHECK_THROWS_AS(validate(1.0, 1.0, 1.0, 1.0), NotSymplectic);
    try {
        validate(1.0, 1.0, 1.0, 1.0);
    } catch (const NotSymplectic& e) {
        CHECK(e.residual == doctest::Approx(-1.0));
    }
    CHECK_THROWS_AS(validate(1.0, 0.0, 0.0, std::nan("")), NotSymplectic);
}

TEST_CASE("inverse swaps diagonal and negates off-diagonal") {
    const auto l1 = matrices::l1();
    const auto inv = l1.inverse();
    CHECK(inv.a() == 0.0);
    CHECK(inv.b() == -1.0);
    CHECK(inv.c() == 1.0);
    CHECK(inv.d() == 0.0);

    const auto m = validate(2.0, 2.0, -0.25, 0.25);
    const auto mi = m.inverse();
    CHECK(mi.a() == 0.25);
    CHECK(mi.b() == -2.0);
    CHECK(mi.c() == 0.25);
    CHECK(mi.d() == 2.0);

    const auto eye = validate(1, 0, 0, 1);
    CHECK(eye.inverse() == eye);
}

TEST_CASE("inverse times original is the identity") {
    oracles::MatrixSampler sampler(11);
    for (int i = 0; i < 200; ++i) {
        const auto m = sampler.any();
        const auto mi = m.inverse();
        const Mat2 prod = mul(as_mat2(m), as_mat2(mi));
        CHECK(prod.a == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(prod.d == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(prod.b) < 1e-12);
        CHECK(std::abs(prod.c) < 1e-12);
    }
}

TEST_CASE("derived matrices match direct substitution") {
    const auto a1 = validate(2.0, 2.0, -0.25, 0.25);
    const auto a2 = validate(0.0, 0.5, -2.0, 1.0);

    const auto a3 = derive_a3(a1, a2);
    CHECK(a3.a() == doctest::Approx(0.0));
    CHECK(a3.b() == doctest::Approx(0.125));
    CHECK(a3.c() == doctest::Approx(-8.0));
    CHECK(a3.d() == doctest::Approx(0.5));

    const auto a4 = derive_a4(a1, a2);
    CHECK(a4.a() == doctest::Approx(0.0));
    CHECK(a4.b() == doctest::Approx(-0.125));
    CHECK(a4.c() == doctest::Approx(8.0));
    CHECK(a4.d() == doctest::Approx(0.5));

    const auto a5 = derive_a5(a1, a2);
    CHECK(a5.a() == doctest::Approx(0.0));
    CHECK(a5.b() == doctest::Approx(-1.0 / 32.0));
    CHECK(a5.c() == doctest::Approx(32.0));
    CHECK(a5.d() == doctest::Approx(0.25));
}

TEST_CASE("derived matrices for the classical coordinate pair") {
    // direct substitution with a1 = wd_a1, a2 = L1 (a2=0, b2=1, c2=-1, d2=0)
    const auto a1 = matrices::wd_a1();
    const auto a2 = matrices::l1();
    const auto a3 = derive_a3(a1, a2);
    CHECK(a3.a() == doctest::Approx(0.0));
    CHECK(a3.b() == doctest::Approx(0.5));
    CHECK(a3.c() == doctest::Approx(-2.0));
    CHECK(a3.d() == doctest::Approx(0.0));
    const auto a4 = derive_a4(a1, a2);
    CHECK(a4.a() == doctest::Approx(0.0));
    CHECK(a4.b() == doctest::Approx(-0.5));
    CHECK(a4.c() == doctest::Approx(2.0));
    CHECK(a4.d() == doctest::Approx(0.0));
    const auto a5 = derive_a5(a1, a2);
    CHECK(a5.a() == doctest::Approx(0.0));
    CHECK(a5.b() == doctest::Approx(-0.25));
    CHECK(a5.c() == doctest::Approx(4.0));
    CHECK(a5.d() == doctest::Approx(0.0));
}

TEST_CASE("derive guards zero entries") {
    const auto a2 = matrices::l1();
    const auto d1_zero = validate(1.0, -1.0, 1.0, 0.0);
    CHECK_THROWS_AS(derive_a3(d1_zero, a2), ZeroEntry);
    const auto c1_zero = validate(1.0, 1.0, 0.0, 1.0);
    CHECK_THROWS_AS(derive_a4(c1_zero, a2), ZeroEntry);
    const auto a1_zero = matrices::l1(); // a1 entry is 0
    CHECK_THROWS_AS(derive_a5(a1_zero, a2), ZeroEntry);
}

TEST_CASE("derived matrices stay symplectic over random pairs") {
    oracles::MatrixSampler sampler(17);
    for (int i = 0; i < 1000; ++i) {
        const auto a1 = sampler.a1_lemma_compatible();
        const auto a2 = sampler.a2_kernel();
        CHECK_NOTHROW(derive_a3(a1, a2));
        CHECK_NOTHROW(derive_a4(a1, a2));
        CHECK_NOTHROW(derive_a5(a1, a2));
        CHECK(std::abs(derive_a3(a1, a2).det() - 1.0) < 1e-9);
        CHECK(std::abs(derive_a4(a1, a2).det() - 1.0) < 1e-9);
        CHECK(std::abs(derive_a5(a1, a2).det() - 1.0) < 1e-9);
    }
}

TEST_CASE("optimal_a1 closed form") {
    const auto m = optimal_a1(2.0, 2.0);
    CHECK(m.a() == 2.0);
    CHECK(m.b() == 2.0);
    CHECK(m.c() == doctest::Approx(-0.25));
    CHECK(m.d() == doctest::Approx(0.25));

    const auto eye = optimal_a1(1.0, 0.0);
    CHECK(eye.c() == doctest::Approx(0.0));
    CHECK(eye.d() == doctest::Approx(1.0));

    const auto m34 = optimal_a1(3.0, 4.0);
    CHECK(m34.c() == doctest::Approx(-4.0 / 25.0));
    CHECK(m34.d() == doctest::Approx(3.0 / 25.0));

    CHECK_THROWS_AS(optimal_a1(0.0, 0.0), DegenerateInput);
}

TEST_CASE("optimal_a1 minimizes c^2 + d^2 over the symplectic completions") {
    // the completions form a line (c,d) with a d - b c = 1; sweep its parameter
    oracles::MatrixSampler sampler(23);
    for (int trial = 0; trial < 12; ++trial) {
        const double a = sampler.pick(0.3, 3.0);
        const double b = sampler.pick(0.3, 3.0);
        const auto best = optimal_a1(a, b);
        const double best_val = best.c() * best.c() + best.d() * best.d();
        // parametrize completions by c; d = (1 + b c)/a
        for (int k = -400; k <= 400; ++k) {
            const double c = best.c() + 0.01 * k;
            const double d = (1.0 + b * c) / a;
            const double val = c * c + d * d;
            CHECK(val >= best_val - 1e-12);
        }
    }
}

TEST_CASE("lfm_a2 reproduces the matched kernel matrix") {
    const auto m = lfm_a2(0.5, 0.5, 1.0, 2.0, 2.0);
    CHECK(m.a() == doctest::Approx(0.0));
    CHECK(m.b() == doctest::Approx(0.5));
    CHECK(m.c() == doctest::Approx(-2.0));
    CHECK(m.d() == doctest::Approx(1.0));

    // a1 = b1 forces a2 = 0 regardless of beta
    const auto z = lfm_a2(7.3, 0.8, -0.4, 1.3, 1.3);
    CHECK(z.a() == 0.0);

    const auto w = lfm_a2(1.0, 0.5, 0.0, 1.0, 2.0);
    CHECK(w.a() == doctest::Approx(3.0 / 25.0));
    CHECK(w.c() == doctest::Approx(-2.0));

    CHECK_THROWS_AS(lfm_a2(1.0, 0.0, 1.0, 1.0, 2.0), ZeroEntry);
}

TEST_CASE("lfm_a2 with optimal_a1 satisfies the impulse condition") {
    oracles::MatrixSampler sampler(31);
    for (int i = 0; i < 50; ++i) {
        const double a = sampler.pick(0.4, 2.5);
        const double b = sampler.pick(0.4, 2.5);
        const double beta = sampler.uniform(-2.0, 2.0);
        const double b2 = sampler.pick(0.2, 1.5);
        const double d2 = sampler.uniform(-1.0, 1.0);
        const auto a1 = optimal_a1(a, b);
        const auto a2 = lfm_a2(beta, b2, d2, a, b);
        const double cond =
            a2.a() + 2.0 * beta * (a1.d() * a1.d() - a1.c() * a1.c()) * a2.b();
        CHECK(std::abs(cond) < 1e-12);
    }
}

TEST_CASE("resolution bound values") {
    const auto a1 = validate(2.0, 2.0, -0.25, 0.25);
    const auto a2 = validate(0.0, 0.5, -2.0, 1.0);
    CHECK(resolution_bound(a1, a2) == doctest::Approx(1.0 / 1024.0));

    const auto wd1 = matrices::wd_a1();
    CHECK(resolution_bound(wd1, matrices::l1()) == doctest::Approx(1.0 / 16.0));
    // classical-coordinate bound b2^2/16 for any kernel matrix
    const auto k = validate(0.3, 0.7, (0.3 * 0.9 - 1.0) / 0.7, 0.9);
    CHECK(resolution_bound(wd1, k) == doctest::Approx(k.b() * k.b() / 16.0));
    CHECK_THROWS_AS(resolution_bound(a1, validate(1.0, 0.0, 0.5, 1.0)), ZeroEntry);
}

TEST_CASE("superresolution flags") {
    const auto a1 = validate(2.0, 2.0, -0.25, 0.25);
    const auto a2 = validate(0.0, 0.5, -2.0, 1.0);
    const auto f = superresolution_flags(a1, a2);
    CHECK(f.beats_swd);
    CHECK(f.beats_wdl);

    const auto at_boundary = superresolution_flags(a1, matrices::l1()); // |b2| = 1
    CHECK_FALSE(at_boundary.beats_swd);

    const auto wd = superresolution_flags(matrices::wd_a1(), a2); // c1^2+d1^2 = 1/2
    CHECK_FALSE(wd.beats_wdl);
}

TEST_CASE("optimal matrices with a1^2+b1^2 > 2 and 0 < |b2| < 1 beat both") {
    oracles::MatrixSampler sampler(41);
    for (int i = 0; i < 50; ++i) {
        const double a = sampler.pick(1.1, 3.0);
        const double b = sampler.pick(1.1, 3.0);
        REQUIRE(a * a + b * b > 2.0);
        const double b2 = sampler.pick(0.05, 0.95);
        const auto a1 = optimal_a1(a, b);
        const auto a2 = lfm_a2(sampler.uniform(-1.0, 1.0), b2, 0.5, a, b);
        const auto f = superresolution_flags(a1, a2);
        CHECK(f.beats_swd);
        CHECK(f.beats_wdl);
    }
}

TEST_CASE("named auxiliary matrices") {
    CHECK(matrices::l1().det() == doctest::Approx(1.0));
    CHECK(matrices::wd_a1().det() == doctest::Approx(1.0));
    // J and N have determinant -1 and stay outside the validated type
    const Mat2 j = matrices::j_swap();
    CHECK(j.a * j.d - j.b * j.c == doctest::Approx(-1.0));
    const Mat2 n = matrices::n_flip();
    CHECK(n.a * n.d - n.b * n.c == doctest::Approx(-1.0));
    const Mat2 m = matrices::m_shear();
    CHECK(m.a * m.d - m.b * m.c == doctest::Approx(1.0));
    CHECK(m.b == -1.0);
    const Mat2 p = matrices::p_scale(2.0);
    CHECK(p.a == 0.5);
    CHECK(p.d == 2.0);
    // A1 J reproduces the coordinate map rows (b1, d1 / a1, c1)
    const Mat2 a1j = mul(as_mat2(matrices::wd_a1()), j);
    CHECK(a1j.a == 1.0);  // b1
    CHECK(a1j.b == 1.0);  // a1
    CHECK(a1j.c == 0.5);  // d1
    CHECK(a1j.d == -0.5); // c1
}

TEST_CASE("csv round trip") {
    const auto m = validate(2.0, 2.0, -0.25, 0.25);
    const auto back = SymplecticMatrix::from_csv(m.to_csv());
    CHECK(back == m);
    CHECK_THROWS_AS(SymplecticMatrix::from_csv("1,2,3"), ConfigError);
    CHECK_THROWS_AS(SymplecticMatrix::from_csv("1,1,1,1"), NotSymplectic);
}
