#include "qws/grid.hpp"

#include <stdexcept>
#include <string>

namespace qws {

WavevectorGrid make_grid(double half_width, int n_points) {
    if (half_width <= 0.0)
        throw std::invalid_argument("make_grid: half_width must be positive");
    if (n_points < 3)
        throw std::invalid_argument("make_grid: need at least 3 points");
    if (n_points % 2 == 0)
        throw std::invalid_argument(
            "make_grid: n_points must be odd so the resonance k=0 is sampled");

    WavevectorGrid g;
    g.half_width = half_width;
    g.n_points = n_points;
    g.points.resize(n_points);
    g.weights.resize(n_points);

    const int mid = (n_points - 1) / 2;
    const double dk = 2.0 * half_width / (n_points - 1);
    // (i - mid)*dk keeps the grid exactly antisymmetric in floating point.
    for (int i = 0; i < n_points; ++i)
        g.points[i] = static_cast<double>(i - mid) * dk;

    // Composite Simpson: h/3 * {1, 4, 2, 4, ..., 2, 4, 1}
    const double h3 = dk / 3.0;
    for (int i = 0; i < n_points; ++i)
        g.weights[i] = h3 * ((i == 0 || i == n_points - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0));

    return g;
}

namespace {

template <typename T>
T integrate_impl(std::span<const T> samples, const WavevectorGrid& grid) {
    if (static_cast<int>(samples.size()) != grid.n_points)
        throw std::invalid_argument("integrate: sample count " +
                                    std::to_string(samples.size()) +
                                    " does not match grid with " +
                                    std::to_string(grid.n_points) + " points");
    T sum{};
    for (int i = 0; i < grid.n_points; ++i) sum += grid.weights[i] * samples[i];
    return sum;
}

}  // namespace

cd integrate(std::span<const cd> samples, const WavevectorGrid& grid) {
    return integrate_impl(samples, grid);
}

double integrate(std::span<const double> samples, const WavevectorGrid& grid) {
    return integrate_impl(samples, grid);
}

}  // namespace qws
