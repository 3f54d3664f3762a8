#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qws {

using cd = std::complex<double>;

/// Uniform symmetric wavevector grid with composite-Simpson quadrature
/// weights. Wavevectors are measured in units of the emitter linewidth
/// Gamma/v_g; k = 0 (the emitter resonance) is always a grid point.
struct WavevectorGrid {
    double half_width = 0.0;
    int n_points = 0;
    std::vector<double> points;   // strictly increasing, antisymmetric about 0
    std::vector<double> weights;  // composite Simpson, sum == 2*half_width

    double spacing() const { return 2.0 * half_width / (n_points - 1); }
    int center_index() const { return (n_points - 1) / 2; }
};

/// Build a grid on [-half_width, half_width]. n_points must be odd and >= 3
/// so that k = 0 lands exactly on a point and Simpson's rule applies.
WavevectorGrid make_grid(double half_width, int n_points);

/// Composite-Simpson quadrature of sampled data over the grid.
cd integrate(std::span<const cd> samples, const WavevectorGrid& grid);
double integrate(std::span<const double> samples, const WavevectorGrid& grid);

}  // namespace qws
