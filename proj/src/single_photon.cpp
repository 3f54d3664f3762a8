#include "qws/single_photon.hpp"

#include <cmath>
#include <stdexcept>

namespace qws {

ScatteredOnePhoton scatter_one(const SpectralAmplitude& xi, const EmitterParams& p) {
    p.validate();
    ScatteredOnePhoton out{xi, xi};
    out.transmitted.shape = PulseShape::custom;
    out.reflected.shape = PulseShape::custom;
    for (int i = 0; i < xi.grid.n_points; ++i) {
        const double k = xi.grid.points[i];
        out.transmitted.values[i] = transmission(k, p) * xi.values[i];
        out.reflected.values[i] = reflection(k, p) * xi.values[i];
    }
    return out;
}

std::pair<double, double> probabilities(const ScatteredOnePhoton& s) {
    const double pt = s.transmitted.norm_squared();
    const double pr = s.reflected.norm_squared();
    const double total = pt + pr;
    if (total <= 0.0) throw std::invalid_argument("probabilities: empty state");
    return {pt / total, pr / total};
}

namespace {

/// |sum_i w_i |xi_i|^2 r_i exp(i p_i dz)|^2 evaluated from precomputed
/// weighted reflected spectral density.
double spatial_overlap(const std::vector<cd>& wr, const std::vector<double>& k,
                       double dz) {
    cd sum(0.0);
    for (std::size_t i = 0; i < wr.size(); ++i) {
        const double phase = k[i] * dz;
        sum += wr[i] * cd(std::cos(phase), std::sin(phase));
    }
    return std::norm(sum);
}

}  // namespace

FidelityReport fidelities_one(const ScatteredOnePhoton& s, const SpectralAmplitude& xi,
                              const EmitterParams& p, const SpatialSearch& search) {
    const auto& grid = xi.grid;
    cd full(0.0);
    double fint = 0.0;
    double prob = 0.0;
    std::vector<cd> wr(grid.n_points);  // w |xi|^2 r
    for (int i = 0; i < grid.n_points; ++i) {
        const double k = grid.points[i];
        const cd r = reflection(k, p);
        const double dens = grid.weights[i] * std::norm(xi.values[i]);
        full += dens * r;
        fint += dens * std::abs(r);
        prob += dens * std::norm(r);
        wr[i] = dens * r;
    }

    FidelityReport rep;
    rep.f_full = std::norm(full);
    rep.f_int = fint * fint;
    rep.f_prob = prob;

    // Coarse scan of the displacement window via incremental phase rotation,
    // then golden-section refinement around the best node.
    const double win = search.window / p.gamma_tilde;
    const int np = search.coarse_points;
    const double step0 = 2.0 * win / (np - 1);
    std::vector<cd> overlap_grid(np, cd(0.0));
    for (int i = 0; i < grid.n_points; ++i) {
        const double k = grid.points[i];
        cd term = wr[i] * cd(std::cos(-k * win), std::sin(-k * win));
        const cd rot(std::cos(k * step0), std::sin(k * step0));
        for (int j = 0; j < np; ++j) {
            overlap_grid[j] += term;
            term *= rot;
        }
    }
    double best_dz = 0.0;
    double best = -1.0;
    for (int j = 0; j < np; ++j) {
        const double v = std::norm(overlap_grid[j]);
        if (v > best) {
            best = v;
            best_dz = -win + step0 * j;
        }
    }
    const double step = 2.0 * win / (np - 1);
    double lo = best_dz - step, hi = best_dz + step;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = spatial_overlap(wr, grid.points, x1);
    double f2 = spatial_overlap(wr, grid.points, x2);
    for (int it = 0; it < 60 && hi - lo > 1e-10 * win; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = spatial_overlap(wr, grid.points, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = spatial_overlap(wr, grid.points, x1);
        }
    }
    const double refined_dz = 0.5 * (lo + hi);
    const double refined = spatial_overlap(wr, grid.points, refined_dz);
    if (refined > best) {
        best = refined;
        best_dz = refined_dz;
    }
    rep.f_spat = best;
    rep.delta_z_opt = best_dz;
    return rep;
}

std::pair<double, double> lorentzian_closed_forms_one(double sigma, double delta,
                                                      const EmitterParams& p) {
    const double g = p.gamma_tilde;
    const double denom = (g + sigma) * (g + sigma) + 4.0 * delta * delta;
    return {g * g / denom, (g + sigma) * g / denom};
}

}  // namespace qws
