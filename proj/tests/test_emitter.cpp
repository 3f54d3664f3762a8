#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qws/emitter.hpp"

using namespace qws;
using cd = std::complex<double>;

TEST_CASE("coupling consistency Gamma = 4 pi g^2 / v_g") {
    const EmitterParams p{1.0, 0.0, 1.0};
    CHECK(4.0 * std::numbers::pi * p.coupling() * p.coupling() / p.v_g ==
          doctest::Approx(p.gamma_tilde).epsilon(1e-14));
    const EmitterParams p2{2.5, 0.3, 1.0};
    CHECK(4.0 * std::numbers::pi * p2.coupling() * p2.coupling() / p2.v_g ==
          doctest::Approx(p2.gamma_tilde).epsilon(1e-14));
}

TEST_CASE("resonant photon is perfectly reflected with a pi phase shift") {
    const EmitterParams p{1.0, 0.0, 1.0};
    CHECK(std::abs(transmission(0.0, p)) == 0.0);
    // r(delta) = -i(G/2)/(iG/2) = -1: unit modulus, phase pi
    CHECK(reflection(0.0, p).real() == doctest::Approx(-1.0));
    CHECK(reflection(0.0, p).imag() == doctest::Approx(0.0));
    const EmitterParams detuned{1.0, 0.7, 1.0};
    CHECK(std::abs(transmission(0.7, detuned)) == doctest::Approx(0.0));
    CHECK(std::abs(reflection(0.7, detuned)) == doctest::Approx(1.0));
}

TEST_CASE("far-detuned limit transmits") {
    const EmitterParams p{1.0, 0.0, 1.0};
    for (double k : {1e4, -1e4}) {
        CHECK(std::abs(transmission(k, p) - cd(1.0)) < 1e-4);
        CHECK(std::abs(reflection(k, p)) < 1e-4);
    }
}

TEST_CASE("half-linewidth point splits 50/50") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const cd t = transmission(0.5, p);
    CHECK(t.real() == doctest::Approx(0.5));
    CHECK(t.imag() == doctest::Approx(-0.5));
    CHECK(std::norm(t) == doctest::Approx(0.5));
}

TEST_CASE("unitarity and t = 1 + r for random arguments") {
    const EmitterParams p{1.7, -0.4, 1.0};
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (int i = 0; i < 200; ++i) {
        const double k = dist(rng);
        const cd t = transmission(k, p);
        const cd r = reflection(k, p);
        CHECK(std::norm(t) + std::norm(r) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(t - (1.0 + r)) < 1e-14);
    }
}

TEST_CASE("reflection phase winds by pi across the resonance") {
    const EmitterParams p{1.0, 0.3, 1.0};
    double prev = std::arg(reflection(-500.0, p));
    double winding = 0.0;
    for (double k = -500.0; k <= 500.0; k += 0.05) {
        const double a = std::arg(reflection(k, p));
        double d = a - prev;
        while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
        while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
        winding += d;
        prev = a;
    }
    CHECK(std::abs(winding) == doctest::Approx(std::numbers::pi).epsilon(1e-2));
}

TEST_CASE("s factor values and identities") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const cd s0 = s_factor(0.0, p);
    CHECK(s0.real() == doctest::Approx(0.0));
    CHECK(s0.imag() == doctest::Approx(-2.0));
    // |s|^2 is a Lorentzian of FWHM gamma
    CHECK(std::norm(s_factor(0.5, p)) == doctest::Approx(0.5 * std::norm(s0)));
    CHECK(std::abs(s_factor(1e5, p)) < 1e-4);
    // r = -i sqrt(G)/2 * s
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-20.0, 20.0);
    const EmitterParams q{2.3, 0.6, 1.0};
    for (int i = 0; i < 50; ++i) {
        const double k = dist(rng);
        const cd lhs = reflection(k, q);
        const cd rhs = cd(0.0, -0.5 * std::sqrt(q.gamma_tilde)) * s_factor(k, q);
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
}

TEST_CASE("b element symmetries and decay") {
    const EmitterParams p{1.0, 0.2, 1.0};
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int i = 0; i < 50; ++i) {
        const double a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        CHECK(std::abs(b_element(a, b, c, d, p) - b_element(b, a, c, d, p)) < 1e-15);
        CHECK(std::abs(b_element(a, b, c, d, p) - b_element(a, b, d, c, p)) < 1e-15);
    }
    CHECK(std::abs(b_element(1e6, 0.0, 0.0, 0.0, p)) < 1e-4);
}

TEST_CASE("b element at the origin") {
    // s0 = -2i, so B = i/pi * (-2i)(-2i)(-4i) = -16/pi (purely real)
    const EmitterParams p{1.0, 0.0, 1.0};
    const cd s0(0.0, -2.0);
    const cd expected = cd(0.0, 1.0 / std::numbers::pi) * s0 * s0 * (s0 + s0);
    CHECK(expected.real() == doctest::Approx(-16.0 / std::numbers::pi));
    CHECK(expected.imag() == doctest::Approx(0.0));
    const cd got = b_element(0.0, 0.0, 0.0, 0.0, p);
    CHECK(std::abs(got - expected) < 1e-14);
}

TEST_CASE("invalid parameters are rejected") {
    const EmitterParams zero{0.0, 0.0, 1.0};
    const EmitterParams negative{-1.0, 0.0, 1.0};
    CHECK_THROWS_AS(zero.validate(), std::invalid_argument);
    CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
}
