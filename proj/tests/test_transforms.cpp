#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qws/emitter.hpp"
#include "qws/grid.hpp"
#include "qws/pulses.hpp"
#include "qws/transforms.hpp"

using namespace qws;

namespace {

/// Direct O(N^2) quadrature reference for convolve_on_sum.
std::vector<cd> direct_convolution(std::span<const cd> f, std::span<const cd> g,
                                   const WavevectorGrid& grid) {
    const int n = grid.n_points;
    std::vector<cd> out(2 * n - 1, cd(0.0));
    for (int m = 0; m <= 2 * (n - 1); ++m) {
        cd sum(0.0);
        for (int i = std::max(0, m - n + 1); i <= std::min(n - 1, m); ++i)
            sum += grid.weights[i] * f[i] * g[m - i];
        out[m] = sum;
    }
    return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

double simpson(const std::vector<double>& f, double h) {
    double s = f.front() + f.back();
    for (std::size_t i = 1; i + 1 < f.size(); ++i) s += (i % 2 ? 4.0 : 2.0) * f[i];
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("box autoconvolution gives a triangle") {
    const auto grid = make_grid(4.0, 513);
    const auto box = square_pulse(1.0, grid);
    const auto c = convolve_on_sum(std::span<const cd>(box.values),
                                   std::span<const cd>(box.values), grid);
    CHECK(std::abs(c.at(0.0) - cd(1.0)) < 1e-2);        // peak sigma*(1/sqrt(s))^2
    CHECK(std::abs(c.at(0.5) - cd(0.5)) < 1e-2);        // halfway down the ramp
    CHECK(std::abs(c.at(1.5)) < 1e-12);                 // outside the base
    CHECK(std::abs(c.at(-1.5)) < 1e-12);
}

TEST_CASE("delta-like input reproduces the other factor") {
    const auto grid = make_grid(5.0, 201);
    const int idx = 30;
    std::vector<cd> f(grid.n_points, cd(0.0)), g(grid.n_points);
    f[idx] = 1.0 / grid.weights[idx];  // unit-mass spike
    for (int i = 0; i < grid.n_points; ++i)
        g[i] = cd(std::exp(-0.3 * grid.points[i] * grid.points[i]),
                  std::sin(grid.points[i]));
    const auto c = convolve_on_sum(std::span<const cd>(f), std::span<const cd>(g), grid);
    for (int j = 0; j < grid.n_points; ++j) {
        const double e = grid.points[idx] + grid.points[j];
        CHECK(std::abs(c.at(e) - g[j]) < 1e-9);
    }
}

TEST_CASE("fft convolution equals direct quadrature") {
    const EmitterParams params{1.0, 0.0, 1.0};
    for (int n : {65, 257}) {
        const auto grid = make_grid(12.0, n);
        const auto xi = lorentzian_pulse(1.0, grid);
        std::vector<cd> f(n), g(xi.values);
        for (int i = 0; i < n; ++i) f[i] = xi.values[i] * s_factor(grid.points[i], params);
        const auto fast = convolve_on_sum(std::span<const cd>(f),
                                          std::span<const cd>(g), grid);
        const auto slow = direct_convolution(f, g, grid);
        double max_ref = 0.0;
        for (const auto& v : slow) max_ref = std::max(max_ref, std::abs(v));
        for (std::size_t m = 0; m < slow.size(); ++m)
            CHECK(std::abs(fast.values[m] - slow[m]) <= 1e-8 * max_ref);
    }
}

TEST_CASE("fft convolution equals direct quadrature on random data") {
    std::mt19937 rng(4242);
    std::normal_distribution<double> dist(0.0, 1.0);
    const auto grid = make_grid(3.0, 97);
    std::vector<cd> f(grid.n_points), g(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
        f[i] = cd(dist(rng), dist(rng));
        g[i] = cd(dist(rng), dist(rng));
    }
    const auto fast = convolve_on_sum(std::span<const cd>(f), std::span<const cd>(g), grid);
    const auto slow = direct_convolution(f, g, grid);
    double max_ref = 0.0;
    for (const auto& v : slow) max_ref = std::max(max_ref, std::abs(v));
    for (std::size_t m = 0; m < slow.size(); ++m)
        CHECK(std::abs(fast.values[m] - slow[m]) <= 1e-10 * max_ref);
}

TEST_CASE("gaussian transforms to the reciprocal-width gaussian") {
    const auto grid = make_grid(40.0, 4097);
    const auto xi = gaussian_pulse(1.0, grid);
    const double sp = 1.0 / (2.0 * std::sqrt(std::numbers::ln2));
    const auto z = linspace(-10.0, 10.0, 401);
    const auto prof = to_space(xi, z);
    // closed form: (sp^2/pi)^{1/4} exp(-sp^2 z^2 / 2)
    const double amp = std::pow(sp * sp / std::numbers::pi, 0.25);
    for (std::size_t j = 0; j < z.size(); ++j) {
        const double expected = amp * std::exp(-0.5 * sp * sp * z[j] * z[j]);
        CHECK(std::abs(prof[j] - cd(expected)) < 1e-8);
    }
}

TEST_CASE("lorentzian transforms to a one-sided exponential") {
    const auto grid = make_grid(400.0, 32769);  // wide grid tames truncation ringing
    const double sigma = 1.0;
    const auto xi = lorentzian_pulse(sigma, grid);
    const auto z = linspace(-6.0, 6.0, 121);
    const auto prof = to_space(xi, z);
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (std::abs(z[j]) < 0.2) continue;  // quadrature sees the jump midpoint
        // i sqrt(sigma) e^{-sigma z/2} theta(z): front part of the pulse at z > 0
        const double expected =
            z[j] > 0.0 ? sigma * std::exp(-sigma * z[j]) : 0.0;
        CHECK(std::norm(prof[j]) == doctest::Approx(expected).epsilon(0.02).scale(1.0));
    }
}

TEST_CASE("square pulse transforms to a sinc") {
    // fine grid keeps the half-weight edge-sample error below the tolerance
    const auto grid = make_grid(40.0, 32769);
    const double sigma = 1.0;
    const auto xi = square_pulse(sigma, grid);
    const auto z = linspace(-25.0, 25.0, 501);
    const auto prof = to_space(xi, z);
    for (std::size_t j = 0; j < z.size(); ++j) {
        const double zz = z[j];
        const double expected =
            std::abs(zz) < 1e-9
                ? std::sqrt(sigma / (2.0 * std::numbers::pi))
                : 2.0 * std::sin(0.5 * sigma * zz) /
                      (zz * std::sqrt(2.0 * std::numbers::pi * sigma));
        CHECK(prof[j].real() == doctest::Approx(expected).epsilon(2e-3).scale(1.0));
    }
    // first zero of |xi(z)|^2 at z = 2 pi / sigma
    const double z0 = 2.0 * std::numbers::pi / sigma;
    const auto at_zero = to_space(xi, std::vector<double>{z0});
    CHECK(std::abs(at_zero[0]) < 1e-3);
}

TEST_CASE("Parseval between wavevector and space") {
    const auto grid = make_grid(40.0, 4097);
    const auto xi = gaussian_pulse(1.0, grid);
    const auto z = linspace(-20.0, 20.0, 2001);
    const auto prof = to_space(xi, z);
    std::vector<double> dens(prof.size());
    for (std::size_t j = 0; j < prof.size(); ++j) dens[j] = std::norm(prof[j]);
    const double space_norm = simpson(dens, z[1] - z[0]);
    CHECK(space_norm == doctest::Approx(xi.norm_squared()).epsilon(1e-6));
}
