#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qws/grid.hpp"
#include "qws/oracle.hpp"
#include "qws/pulses.hpp"
#include "qws/single_photon.hpp"

using namespace qws;

TEST_CASE("decoupled emitter leaves only free phases") {
    const EmitterParams free_p{1e-30, 0.0, 1.0};
    const auto grid = make_grid(12.0, 65);
    const auto xi = gaussian_pulse(1.0, grid);
    const double z0 = -4.0;

    auto one = make_one_excitation(xi, z0);
    const auto evolved = evolve_one(one, free_p, 6.0, 0.01);
    // stripping the free phases recovers the initial amplitudes
    const auto cmp = compare(evolved, one, free_p, 6.0);
    CHECK(cmp.overlap_sq == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(cmp.dp1) < 1e-10);

    auto two = make_two_excitation(xi, z0);
    const auto evolved2 = evolve_two(two, free_p, 6.0, 0.01);
    const auto cmp2 = compare(evolved2, two, free_p, 6.0);
    CHECK(cmp2.overlap_sq == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(cmp2.dp12) < 1e-10);
}

TEST_CASE("norm is conserved through the evolution") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const auto grid = make_grid(16.0, 129);
    const auto xi = gaussian_pulse(1.0, grid);

    const auto one = evolve_one(make_one_excitation(xi, -5.0), p, 16.0, 0.004);
    CHECK(one.norm_squared() == doctest::Approx(1.0).epsilon(1e-6));

    const auto two = evolve_two(make_two_excitation(xi, -5.0), p, 16.0, 0.004);
    CHECK(two.norm_squared() == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("emitter amplitude decays back to the continuum") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const auto grid = make_grid(16.0, 129);
    const auto xi = gaussian_pulse(1.0, grid);
    const auto mid = evolve_one(make_one_excitation(xi, -5.0), p, 5.0, 0.004);
    const auto late = evolve_one(make_one_excitation(xi, -5.0), p, 18.0, 0.004);
    CHECK(std::abs(mid.emitter_amp) > 0.1);   // transient excitation
    CHECK(std::abs(late.emitter_amp) < 0.02);  // re-emitted long after passage
}

TEST_CASE("too-large dt aborts with a diagnostic") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const auto grid = make_grid(16.0, 129);  // max |omega| dt = 16 * 0.2 > 2.8
    const auto xi = gaussian_pulse(1.0, grid);
    CHECK_THROWS_AS(evolve_one(make_one_excitation(xi, -5.0), p, 16.0, 0.2),
                    std::runtime_error);
}

TEST_CASE("one-excitation sector reproduces the S-matrix") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const auto grid = make_grid(20.0, 257);
    const double z0 = -8.0;
    const double t_final = 26.0;

    SUBCASE("lorentzian reflection probability at sigma = gamma") {
        const auto xi = lorentzian_pulse(1.0, grid);
        const auto final = evolve_one(make_one_excitation(xi, z0), p, t_final, 0.002);
        // closed form P2 = 1/2 at sigma = gamma, delta = 0
        CHECK(final.mode_probability(2) == doctest::Approx(0.5).epsilon(1e-2));
        const auto cmp = compare(final, smatrix_one_reference(xi, z0, p), p, t_final);
        CHECK(cmp.overlap_sq >= 0.99);
        CHECK(std::abs(cmp.dp2) <= 0.02);
    }

    SUBCASE("gaussian pulse against scatter_one probabilities") {
        const auto xi = gaussian_pulse(1.0, grid);
        const auto final = evolve_one(make_one_excitation(xi, z0), p, t_final, 0.002);
        const auto cmp = compare(final, smatrix_one_reference(xi, z0, p), p, t_final);
        CHECK(cmp.overlap_sq >= 0.99);
        CHECK(std::abs(cmp.dp1) <= 0.02);
        CHECK(std::abs(cmp.dp2) <= 0.02);
    }
}

TEST_CASE("halving dt leaves the one-excitation results unchanged") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const auto grid = make_grid(16.0, 129);
    const auto xi = gaussian_pulse(1.0, grid);
    const auto a = evolve_one(make_one_excitation(xi, -5.0), p, 14.0, 0.004);
    const auto b = evolve_one(make_one_excitation(xi, -5.0), p, 14.0, 0.002);
    CHECK(std::abs(a.mode_probability(2) - b.mode_probability(2)) < 1e-6);
}

TEST_CASE("two-excitation sector tracks the S-matrix on a coarse grid") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const auto grid = make_grid(12.0, 97);
    const auto xi = gaussian_pulse(1.0, grid);
    const double z0 = -5.0;
    const double t_final = 18.0;
    const auto final = evolve_two(make_two_excitation(xi, z0), p, t_final, 0.004);
    const auto ref = smatrix_two_reference(xi, z0, p);
    const auto cmp = compare(final, ref, p, t_final);
    CHECK(cmp.overlap_sq >= 0.95);
    CHECK(std::abs(cmp.dp11) <= 0.03);
    CHECK(std::abs(cmp.dp12) <= 0.03);
    // photon pair never ends on the excited emitter
    CHECK(std::abs(final.norm_squared() -
                   (final.probability_11() + final.probability_12() +
                    final.probability_22())) < 1e-3);
}

TEST_CASE("compare distinguishes identical and orthogonal states") {
    const EmitterParams p{1.0, 0.0, 1.0};
    const auto grid = make_grid(12.0, 65);
    const auto xi = gaussian_pulse(1.0, grid);
    auto a = make_one_excitation(xi, -4.0);
    const auto same = compare(a, a, p, 0.0);
    CHECK(same.overlap_sq == doctest::Approx(1.0).epsilon(1e-12));

    auto b = a;
    const int n = grid.n_points;
    // move the photon to the other mode: orthogonal state
    for (int i = 0; i < n; ++i) {
        b.photon_amps[n + i] = b.photon_amps[i];
        b.photon_amps[i] = cd(0.0);
    }
    const auto ortho = compare(a, b, p, 0.0);
    CHECK(ortho.overlap_sq == doctest::Approx(0.0).epsilon(1e-12));
}
