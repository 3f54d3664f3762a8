#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qws/grid.hpp"
#include "qws/product_stats.hpp"
#include "qws/pulses.hpp"
#include "qws/two_photon.hpp"

using namespace qws;

TEST_CASE("factorized evaluator equals the dense pipeline") {
    const auto grid = make_grid(12.0, 257);
    for (const double delta : {0.0, 0.5}) {
        const EmitterParams p{1.0, delta, 1.0};
        for (const bool nl : {true, false}) {
            for (const auto& xi :
                 {gaussian_pulse(1.0, grid), lorentzian_pulse(0.7, grid)}) {
                const auto beta = product_input(xi, xi);
                const auto scat = scatter_two(beta, p, nl);
                const auto probs = outcome_probabilities(scat);
                const auto fid = fidelities_two(scat, beta);
                const auto stats = product_scatter_stats(xi, p, {nl, 0.0});
                CHECK(stats.p11 == doctest::Approx(probs.p11).epsilon(1e-11));
                CHECK(stats.p12 == doctest::Approx(probs.p12).epsilon(1e-11));
                CHECK(stats.f_prob == doctest::Approx(fid.f_prob).epsilon(1e-11));
                CHECK(stats.f_full == doctest::Approx(fid.f_full).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("windowing the bound-state slices does not change the result") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const auto grid = lorentzian_stats_grid(0.5, 1.0, 1e-4);
    const auto xi = lorentzian_pulse(0.5, grid);
    const auto full = product_scatter_stats(xi, p, {true, 0.0});
    const auto w256 = product_scatter_stats(xi, p, {true, 256.0});
    const auto w128 = product_scatter_stats(xi, p, {true, 128.0});
    // measured clip error: ~2e-9 at 256, ~2e-8 at 128, shrinking ~W_b^-3
    CHECK(std::abs(w256.p11 - full.p11) < 2e-7);
    CHECK(std::abs(w128.p11 - full.p11) < 2e-6);
    CHECK(std::abs(w256.f_full - full.f_full) < 2e-7);
}

TEST_CASE("wide grids meet the Lorentzian closed forms at 1e-4") {
    for (const double delta : {0.0, 0.5}) {
        const EmitterParams p{1.0, delta, 1.0};
        for (const double sigma : {0.2, 1.0, 2.0}) {
            const auto grid = lorentzian_stats_grid(sigma, 1.0, 2e-5);
            const auto xi = lorentzian_pulse(sigma, grid);
            for (const bool nl : {true, false}) {
                const auto stats = product_scatter_stats(xi, p, {nl, 256.0});
                const double cf = closed_form_p11_lorentzian(sigma, delta, p, nl);
                CHECK(std::abs(stats.p11 - cf) < 1e-4);
            }
        }
    }
}

TEST_CASE("enhancement ratio matches 1 + 2/(1+3 sigma)") {
    const EmitterParams p{1.0, 0.0, 1.0};
    for (const double sigma : {0.5, 1.0}) {
        const auto grid = lorentzian_stats_grid(sigma, 1.0, 4e-6);
        const auto xi = lorentzian_pulse(sigma, grid);
        const auto on = product_scatter_stats(xi, p, {true, 256.0});
        const auto off = product_scatter_stats(xi, p, {false, 256.0});
        CHECK(on.p11 / off.p11 ==
              doctest::Approx(1.0 + 2.0 / (1.0 + 3.0 * sigma)).epsilon(1e-3));
    }
}

TEST_CASE("gaussian pulses reach high beam-splitter fidelities near sigma = gamma") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const auto grid = make_grid(40.0, 4097);
    const auto stats = product_scatter_stats(gaussian_pulse(1.1, grid), p, {true, 0.0});
    CHECK(stats.f_prob > 0.85);
    CHECK(stats.f_full > 0.72);
    CHECK(stats.f_full <= stats.f_prob);
}

TEST_CASE("f_prob is twice p11 and probabilities stay in range") {
    const EmitterParams p{1.0, 0.3, 1.0};
    const auto grid = make_grid(40.0, 4097);
    const auto stats = product_scatter_stats(lorentzian_pulse(0.8, grid), p, {true, 0.0});
    CHECK(stats.f_prob == doctest::Approx(2.0 * stats.p11).epsilon(1e-14));
    CHECK(stats.p11 >= 0.0);
    CHECK(stats.p12 >= 0.0);
    CHECK(stats.p11 + stats.p12 + stats.p22 == doctest::Approx(1.0).epsilon(1e-3));
}
