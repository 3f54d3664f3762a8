#include "qws/two_photon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sum_kernel.hpp"

namespace qws {

double TwoPhotonAmplitude::norm_squared() const {
    const int n = grid.n_points;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += grid.weights[j] * std::norm(values[static_cast<std::size_t>(i) * n + j]);
        sum += grid.weights[i] * row;
    }
    return sum;
}

TwoPhotonAmplitude product_input(const SpectralAmplitude& xi, const SpectralAmplitude& xi2) {
    if (xi.grid.n_points != xi2.grid.n_points ||
        xi.grid.half_width != xi2.grid.half_width)
        throw std::invalid_argument("product_input: pulses on different grids");

    const int n = xi.grid.n_points;
    TwoPhotonAmplitude beta{xi.grid, {}, ModePair::m12, {}};
    beta.values.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            beta.at(i, j) = xi.values[i] * xi2.values[j] + xi2.values[i] * xi.values[j];

    const double scale = 1.0 / std::sqrt(beta.norm_squared());
    for (auto& v : beta.values) v *= scale;

    // Prescale the factors so beta = f(k) f2(k') + f2(k) f(k') holds exactly.
    const double fs = std::sqrt(scale);
    std::vector<cd> f(xi.values), f2(xi2.values);
    for (auto& v : f) v *= fs;
    for (auto& v : f2) v *= fs;
    beta.factors = std::make_pair(std::move(f), std::move(f2));
    return beta;
}

namespace {

detail::IndexedConv bound_state_c(const TwoPhotonAmplitude& beta, const EmitterParams& p) {
    const auto& grid = beta.grid;
    const int n = grid.n_points;
    if (beta.factors) {
        const auto& [f, f2] = *beta.factors;
        const bool identical = f == f2;
        std::span<const cd> fa(f), fb(f2);
        return detail::bound_state_kernel(fa, identical ? fa : fb, grid, p, 0, n, 0, n);
    }
    // General amplitude: direct quadrature of C(E) on the sum grid.
    std::vector<cd> s(n);
    for (int i = 0; i < n; ++i) s[i] = s_factor(grid.points[i], p);
    detail::IndexedConv c{0, std::vector<cd>(2 * n - 1, cd(0.0))};
    for (int m = 0; m <= 2 * (n - 1); ++m) {
        const int lo = std::max(0, m - n + 1);
        const int hi = std::min(n - 1, m);
        cd sum(0.0);
        for (int l = lo; l <= hi; ++l)
            sum += grid.weights[l] * beta.at(l, m - l) * (s[l] + s[m - l]);
        c.v[m] = sum;
    }
    return c;
}

}  // namespace

std::vector<cd> nonlinear_term(const TwoPhotonAmplitude& beta12, const EmitterParams& p) {
    const auto& grid = beta12.grid;
    const int n = grid.n_points;
    const auto c = bound_state_c(beta12, p);

    std::vector<cd> s(n);
    for (int i = 0; i < n; ++i) s[i] = s_factor(grid.points[i], p);
    const cd pref(0.0, std::sqrt(p.gamma_tilde) / std::numbers::pi);

    std::vector<cd> b(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const cd si = pref * s[i];
        for (int j = 0; j < n; ++j)
            b[static_cast<std::size_t>(i) * n + j] = si * s[j] * c.v[i + j - c.s0];
    }
    return b;
}

std::vector<cd> nonlinear_term_direct(const TwoPhotonAmplitude& beta12,
                                      const EmitterParams& p) {
    const auto& grid = beta12.grid;
    const int n = grid.n_points;
    std::vector<cd> b(static_cast<std::size_t>(n) * n, cd(0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int m = i + j;
            const int lo = std::max(0, m - n + 1);
            const int hi = std::min(n - 1, m);
            cd sum(0.0);
            for (int l = lo; l <= hi; ++l)
                sum += grid.weights[l] * beta12.at(l, m - l) *
                       b_element(grid.points[i], grid.points[j], grid.points[l],
                                 grid.points[m - l], p);
            b[static_cast<std::size_t>(i) * n + j] = sum;
        }
    }
    return b;
}

ScatteredTwoPhotonState scatter_two(const TwoPhotonAmplitude& beta12,
                                    const EmitterParams& p, bool include_nonlinearity) {
    if (beta12.mode_pair != ModePair::m12)
        throw std::invalid_argument("scatter_two: input must be a counter-propagating (12) state");
    p.validate();

    const auto& grid = beta12.grid;
    const int n = grid.n_points;
    std::vector<cd> t(n), r(n);
    for (int i = 0; i < n; ++i) {
        t[i] = transmission(grid.points[i], p);
        r[i] = reflection(grid.points[i], p);
    }

    std::vector<cd> b;
    if (include_nonlinearity) b = nonlinear_term(beta12, p);

    ScatteredTwoPhotonState out;
    out.includes_nonlinearity = include_nonlinearity;
    out.b11 = TwoPhotonAmplitude{grid, std::vector<cd>(beta12.values.size()), ModePair::m11, {}};
    out.b12 = TwoPhotonAmplitude{grid, std::vector<cd>(beta12.values.size()), ModePair::m12, {}};

    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            const cd bq = include_nonlinearity ? 0.25 * b[idx] : cd(0.0);
            const cd same_dir = (t[i] * r[j] + r[i] * t[j]) * beta12.values[idx] + bq;
            const cd cross_dir = (t[i] * t[j] + r[i] * r[j]) * beta12.values[idx] + bq;
            out.b11.values[idx] = inv_sqrt2 * same_dir;
            out.b12.values[idx] = cross_dir;
        }
    }
    out.b22 = out.b11;
    out.b22.mode_pair = ModePair::m22;
    return out;
}

TwoPhotonOutcome outcome_probabilities(const ScatteredTwoPhotonState& s) {
    return TwoPhotonOutcome{s.b11.norm_squared(), s.b12.norm_squared(),
                            s.b22.norm_squared()};
}

double closed_form_p11_lorentzian(double sigma, double delta, const EmitterParams& p,
                                  bool include_nonlinearity) {
    if (sigma <= 0.0)
        throw std::invalid_argument("closed_form_p11_lorentzian: sigma must be positive");
    const double g = p.gamma_tilde;
    const double d2 = 4.0 * delta * delta;
    const double a = (sigma + g) * (sigma + g) + d2;
    if (include_nonlinearity) {
        const double num =
            3.0 * g * sigma * (3.0 * sigma + g) * (sigma + g) + d2 * g * (sigma + 2.0 * g);
        const double b = (3.0 * sigma + g) * (3.0 * sigma + g) + d2;
        return num / (b * a);
    }
    const double num = sigma * g * (sigma + g) * (sigma + g) + d2 * g * (sigma + 2.0 * g);
    return num / (a * a);
}

double linear_resonant_p11(const SpectralAmplitude& xi, const EmitterParams& p) {
    if (p.delta != 0.0)
        throw std::invalid_argument("linear_resonant_p11: requires resonant pulses (delta = 0)");
    const auto& grid = xi.grid;
    const int n = grid.n_points;

    double max_dens = 0.0;
    for (const auto& v : xi.values) max_dens = std::max(max_dens, std::norm(v));
    for (int i = 0; i < n; ++i) {
        const double asym = std::abs(std::norm(xi.values[i]) - std::norm(xi.values[n - 1 - i]));
        if (asym > 1e-8 * max_dens)
            throw std::invalid_argument(
                "linear_resonant_p11: |xi(-k)|^2 = |xi(k)|^2 violated");
    }

    const double norm = xi.norm_squared();
    const double hg = 0.5 * p.gamma_tilde;
    double a = 0.0;
    for (int i = 0; i < n; ++i) {
        const double k = grid.points[i];
        a += grid.weights[i] * std::norm(xi.values[i]) * hg * hg / (k * k + hg * hg);
    }
    a /= norm;
    return a * (1.0 - a);
}

FidelityReport fidelities_two(const ScatteredTwoPhotonState& s,
                              const TwoPhotonAmplitude& input) {
    const auto& grid = input.grid;
    const int n = grid.n_points;
    const double sqrt2 = std::numbers::sqrt2;

    cd full(0.0);
    double fint = 0.0;
    for (int i = 0; i < n; ++i) {
        const double wi = grid.weights[i];
        for (int j = 0; j < n; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            const cd a = sqrt2 * s.b11.values[idx];  // beta'_12 of the fidelity formulas
            const double w = wi * grid.weights[j];
            full += w * std::conj(input.values[idx]) * a;
            fint += w * std::abs(input.values[idx]) * std::abs(a);
        }
    }

    FidelityReport rep;
    rep.f_full = std::norm(full);
    rep.f_int = fint * fint;
    rep.f_prob = s.b11.norm_squared() + s.b22.norm_squared();
    return rep;
}

PhotonDensity photon_density(const TwoPhotonAmplitude& component,
                             std::span<const double> z_points) {
    const auto& grid = component.grid;
    const int n = grid.n_points;
    const std::size_t nz = z_points.size();
    const double inv2pi = 1.0 / (2.0 * std::numbers::pi);

    // Parseval along the untransformed axis: N_1(z) = int dk' |eta(z,k')|^2
    // with eta the 1D transform along axis 0 (mode 1), and likewise for N_2.
    std::vector<double> n1(nz, 0.0), n2(nz, 0.0);
    std::vector<cd> phase(n), acc1(n);
    for (std::size_t zi = 0; zi < nz; ++zi) {
        const double z = z_points[zi];
        for (int i = 0; i < n; ++i) {
            const double ph = grid.points[i] * z;
            phase[i] = cd(std::cos(ph), std::sin(ph));
        }
        std::fill(acc1.begin(), acc1.end(), cd(0.0));
        for (int i = 0; i < n; ++i) {
            const cd wp = grid.weights[i] * phase[i];
            const cd* row = component.values.data() + static_cast<std::size_t>(i) * n;
            cd row_dot(0.0);
            for (int j = 0; j < n; ++j) {
                acc1[j] += wp * row[j];
                row_dot += grid.weights[j] * phase[j] * row[j];
            }
            n2[zi] += grid.weights[i] * std::norm(row_dot);
        }
        for (int j = 0; j < n; ++j) n1[zi] += grid.weights[j] * std::norm(acc1[j]);
        n1[zi] *= inv2pi;
        n2[zi] *= inv2pi;
    }

    PhotonDensity out;
    switch (component.mode_pair) {
        case ModePair::m11:
            for (auto& v : n1) v *= 2.0;
            out.mode1 = std::move(n1);
            out.mode2.assign(nz, 0.0);
            break;
        case ModePair::m22:
            for (auto& v : n1) v *= 2.0;
            out.mode2 = std::move(n1);
            out.mode1.assign(nz, 0.0);
            break;
        case ModePair::m12:
            out.mode1 = std::move(n1);
            out.mode2 = std::move(n2);
            break;
    }
    return out;
}

}  // namespace qws
