#pragma once

#include <span>
#include <vector>

#include "qws/grid.hpp"
#include "qws/pulses.hpp"

namespace qws {

/// Convolution on the total-wavevector axis: C(E) = int dk f(k) g(E-k),
/// sampled on the E-grid of spacing dk covering [-2W, 2W]. The quadrature
/// weights of the k-grid are attached to f, so the result equals the direct
/// double-loop quadrature up to FFT roundoff.
struct SumGridFunction {
    double e_min = 0.0;
    double spacing = 0.0;
    std::vector<cd> values;  // values[m] = C(e_min + m*spacing)

    double e_point(int m) const { return e_min + m * spacing; }
    /// Linear interpolation for E between nodes; zero outside the range.
    cd at(double e) const;
};

SumGridFunction convolve_on_sum(std::span<const cd> f, std::span<const cd> g,
                                const WavevectorGrid& grid);

/// Spatial profile xi(z) = (2pi)^{-1/2} int dk xi(k) exp(ikz) by direct
/// quadrature for an arbitrary set of positions.
std::vector<cd> to_space(const SpectralAmplitude& amp, std::span<const double> z_points);

}  // namespace qws
