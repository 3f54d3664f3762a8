#include "qws/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "linear_convolution.hpp"

namespace qws {

cd SumGridFunction::at(double e) const {
    const double x = (e - e_min) / spacing;
    if (x < 0.0 || x > static_cast<double>(values.size() - 1)) return cd(0.0);
    const auto lo = static_cast<std::size_t>(x);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = x - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
}

SumGridFunction convolve_on_sum(std::span<const cd> f, std::span<const cd> g,
                                const WavevectorGrid& grid) {
    if (static_cast<int>(f.size()) != grid.n_points ||
        static_cast<int>(g.size()) != grid.n_points)
        throw std::invalid_argument("convolve_on_sum: samples do not match grid");

    std::vector<cd> wf(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) wf[i] = grid.weights[i] * f[i];
    std::vector<cd> gv(g.begin(), g.end());

    SumGridFunction out;
    out.e_min = -2.0 * grid.half_width;
    out.spacing = grid.spacing();
    out.values = detail::linear_convolution(wf, gv);
    return out;
}

std::vector<cd> to_space(const SpectralAmplitude& amp, std::span<const double> z_points) {
    const auto& grid = amp.grid;
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    std::vector<cd> wv(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) wv[i] = grid.weights[i] * amp.values[i];

    std::vector<cd> out(z_points.size());
    for (std::size_t j = 0; j < z_points.size(); ++j) {
        const double z = z_points[j];
        cd sum(0.0);
        for (int i = 0; i < grid.n_points; ++i) {
            const double phase = grid.points[i] * z;
            sum += wv[i] * cd(std::cos(phase), std::sin(phase));
        }
        out[j] = norm * sum;
    }
    return out;
}

}  // namespace qws
