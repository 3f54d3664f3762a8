#pragma once

#include <string>
#include <vector>

#include "qws/grid.hpp"

namespace qws {

enum class PulseShape { lorentzian, gaussian, square, custom };

std::string to_string(PulseShape s);
PulseShape pulse_shape_from_string(const std::string& name);

/// Single-photon spectral wavepacket xi(k) sampled on a grid. The named
/// constructors return the textbook formula values; ask for normalized()
/// when a unit grid norm is required (the Lorentzian loses tail mass
/// sigma/(pi*half_width) to truncation).
struct SpectralAmplitude {
    WavevectorGrid grid;
    std::vector<cd> values;
    PulseShape shape = PulseShape::custom;
    double sigma = 0.0;  // spectral FWHM of |xi|^2

    double norm_squared() const;
    SpectralAmplitude normalized() const;
};

/// xi(k) = sqrt(sigma/2pi)/(k - i sigma/2); pole in the lower half plane so
/// the spatial profile is a front-loaded one-sided exponential.
SpectralAmplitude lorentzian_pulse(double sigma, const WavevectorGrid& grid);

/// xi(k) = (pi sp^2)^{-1/4} exp(-k^2/(2 sp^2)) with sp = sigma/(2 sqrt(ln 2)).
SpectralAmplitude gaussian_pulse(double sigma, const WavevectorGrid& grid);

/// xi(k) = sigma^{-1/2} inside |k| < sigma/2, half-weight value
/// sigma^{-1/2}/sqrt(2) at |k| = sigma/2 when an edge lands on a grid point.
SpectralAmplitude square_pulse(double sigma, const WavevectorGrid& grid);

SpectralAmplitude custom_pulse(std::vector<cd> values, const WavevectorGrid& grid,
                               double sigma = 0.0);

}  // namespace qws
