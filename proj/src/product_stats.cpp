#include "qws/product_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "linear_convolution.hpp"
#include "sum_kernel.hpp"

namespace qws {

namespace {

detail::IndexedConv windowed_conv(int i0_a, const std::vector<cd>& a, int i0_b,
                                  const std::vector<cd>& b) {
    return detail::IndexedConv{i0_a + i0_b, detail::linear_convolution(a, b)};
}

}  // namespace

ProductScatterStats product_scatter_stats(const SpectralAmplitude& xi,
                                          const EmitterParams& p,
                                          const ProductScatterOptions& opts) {
    p.validate();
    const auto& grid = xi.grid;
    const int n = grid.n_points;
    const double pi = std::numbers::pi;

    // Linear 1D reductions over the full grid.
    double norm2 = 0.0, it = 0.0, ir = 0.0;
    cd kk(0.0), t1(0.0), r1(0.0);
    for (int i = 0; i < n; ++i) {
        const cd t = transmission(grid.points[i], p);
        const cd r = reflection(grid.points[i], p);
        const double dens = grid.weights[i] * std::norm(xi.values[i]);
        norm2 += dens;
        it += dens * std::norm(t);
        ir += dens * std::norm(r);
        kk += dens * t * std::conj(r);
        t1 += dens * t;
        r1 += dens * r;
    }
    // norm2 = |xi|^2 on the grid; probabilities carry 1/|xi|^4, the
    // beam-splitter overlap amplitude 1/|xi|^4 as well (squared below).
    const double n4 = norm2 * norm2;

    double p11 = it * ir + std::norm(kk);
    double p12 = it * it + ir * ir + 2.0 * (kk * kk).real();
    cd f_full_amp = 2.0 * t1 * r1;  // raw scale xi^4

    if (opts.include_nonlinearity) {
        // Bound-state pieces. Everything here carries an s-factor and lives
        // within a few tens of linewidths of resonance, so the slices may be
        // windowed on wide grids; the plain-pulse side keeps 3x the window.
        int a0 = 0, a1 = n, b0 = 0, b1 = n;
        if (opts.b_window > 0.0 && opts.b_window < grid.half_width) {
            const double dk = grid.spacing();
            const int mid = grid.center_index();
            const int ha = std::min(static_cast<int>(std::ceil(opts.b_window / dk)), mid);
            const int hb = std::min(3 * ha, mid);
            a0 = mid - ha;
            a1 = mid + ha + 1;
            b0 = mid - hb;
            b1 = mid + hb + 1;
        }

        const std::span<const cd> values(xi.values);
        // the kernel integrates the symmetrized product 2*xi(k)xi(k'); halve
        // it to get C for the plain product state beta = xi xi
        auto c = detail::bound_state_kernel(values, values, grid, p, a0, a1, b0, b1);
        for (auto& v : c.v) v *= 0.5;

        std::vector<cd> u(a1 - a0), v(a1 - a0), q(a1 - a0), g(a1 - a0);
        for (int i = a0; i < a1; ++i) {
            const double w = grid.weights[i];
            const cd t = transmission(grid.points[i], p);
            const cd r = reflection(grid.points[i], p);
            const cd s = s_factor(grid.points[i], p);
            const cd sc = std::conj(s);
            u[i - a0] = w * t * xi.values[i] * sc;
            v[i - a0] = w * r * xi.values[i] * sc;
            q[i - a0] = w * std::norm(s);
            g[i - a0] = w * std::conj(xi.values[i]) * s;
        }

        const auto uv = windowed_conv(a0, u, a0, v);
        const auto uu = windowed_conv(a0, u, a0, u);
        const auto vv = windowed_conv(a0, v, a0, v);
        const auto qq = windowed_conv(a0, q, a0, q);
        const auto gg = windowed_conv(a0, g, a0, g);

        const double sg = std::sqrt(p.gamma_tilde);
        const cd cross_pref(0.0, -0.5 * sg / pi);
        const double tqq = detail::reduce_abs2_mul(c, qq).real();

        p11 += (cross_pref * detail::reduce_conj_mul(c, uv)).real() +
               p.gamma_tilde / (32.0 * pi * pi) * tqq;
        p12 += (cross_pref * (detail::reduce_conj_mul(c, uu) +
                              detail::reduce_conj_mul(c, vv)))
                   .real() +
               p.gamma_tilde / (16.0 * pi * pi) * tqq;
        f_full_amp += cd(0.0, 0.25 * sg / pi) * detail::reduce_mul(c, gg);
    }

    ProductScatterStats out;
    out.p11 = p11 / n4;
    out.p12 = p12 / n4;
    out.p22 = out.p11;
    out.f_prob = out.p11 + out.p22;
    out.f_full = std::norm(f_full_amp / n4);
    return out;
}

WavevectorGrid lorentzian_stats_grid(double sigma, double gamma, double tail_budget) {
    const double w = std::max(64.0 * gamma, sigma / (std::numbers::pi * tail_budget));
    const double dk = std::min(sigma, gamma) / 16.0;
    const int n = static_cast<int>(2.0 * w / dk) | 1;
    return make_grid(w, n);
}

}  // namespace qws
