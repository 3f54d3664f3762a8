#include "qws/pulses.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qws {

std::string to_string(PulseShape s) {
    switch (s) {
        case PulseShape::lorentzian: return "lorentzian";
        case PulseShape::gaussian: return "gaussian";
        case PulseShape::square: return "square";
        case PulseShape::custom: return "custom";
    }
    return "custom";
}

PulseShape pulse_shape_from_string(const std::string& name) {
    if (name == "lorentzian") return PulseShape::lorentzian;
    if (name == "gaussian") return PulseShape::gaussian;
    if (name == "square") return PulseShape::square;
    if (name == "custom") return PulseShape::custom;
    throw std::invalid_argument("unknown pulse shape: " + name);
}

double SpectralAmplitude::norm_squared() const {
    double sum = 0.0;
    for (int i = 0; i < grid.n_points; ++i)
        sum += grid.weights[i] * std::norm(values[i]);
    return sum;
}

SpectralAmplitude SpectralAmplitude::normalized() const {
    SpectralAmplitude out = *this;
    const double scale = 1.0 / std::sqrt(norm_squared());
    for (auto& v : out.values) v *= scale;
    return out;
}

SpectralAmplitude lorentzian_pulse(double sigma, const WavevectorGrid& grid) {
    if (sigma <= 0.0) throw std::invalid_argument("lorentzian_pulse: sigma must be positive");
    SpectralAmplitude a{grid, {}, PulseShape::lorentzian, sigma};
    a.values.resize(grid.n_points);
    const double amp = std::sqrt(sigma / (2.0 * std::numbers::pi));
    for (int i = 0; i < grid.n_points; ++i)
        a.values[i] = amp / cd(grid.points[i], -0.5 * sigma);
    return a;
}

SpectralAmplitude gaussian_pulse(double sigma, const WavevectorGrid& grid) {
    if (sigma <= 0.0) throw std::invalid_argument("gaussian_pulse: sigma must be positive");
    SpectralAmplitude a{grid, {}, PulseShape::gaussian, sigma};
    a.values.resize(grid.n_points);
    const double sp = sigma / (2.0 * std::sqrt(std::numbers::ln2));
    const double amp = std::pow(std::numbers::pi * sp * sp, -0.25);
    for (int i = 0; i < grid.n_points; ++i) {
        const double k = grid.points[i];
        a.values[i] = amp * std::exp(-k * k / (2.0 * sp * sp));
    }
    return a;
}

SpectralAmplitude square_pulse(double sigma, const WavevectorGrid& grid) {
    if (sigma <= 2.0 * grid.spacing())
        throw std::invalid_argument(
            "square_pulse: sigma must exceed two grid spacings to be resolved");
    SpectralAmplitude a{grid, {}, PulseShape::square, sigma};
    a.values.assign(grid.n_points, cd(0.0));
    const double inside = 1.0 / std::sqrt(sigma);
    const double edge = inside / std::numbers::sqrt2;
    const double half = 0.5 * sigma;
    const double tol = 1e-12 * grid.half_width;
    for (int i = 0; i < grid.n_points; ++i) {
        const double ak = std::abs(grid.points[i]);
        if (ak < half - tol)
            a.values[i] = inside;
        else if (ak <= half + tol)
            a.values[i] = edge;
    }
    return a;
}

SpectralAmplitude custom_pulse(std::vector<cd> values, const WavevectorGrid& grid,
                               double sigma) {
    if (static_cast<int>(values.size()) != grid.n_points)
        throw std::invalid_argument("custom_pulse: value count does not match grid");
    return SpectralAmplitude{grid, std::move(values), PulseShape::custom, sigma};
}

}  // namespace qws
