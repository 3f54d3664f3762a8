#include "qws/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qws {

namespace {

double vec_norm_squared(const std::vector<cd>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return s;
}

}  // namespace

double OneExcitationState::norm_squared() const {
    return vec_norm_squared(photon_amps) + std::norm(emitter_amp);
}

double OneExcitationState::mode_probability(int mode) const {
    const int n = grid.n_points;
    const int off = (mode == 1) ? 0 : n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::norm(photon_amps[off + i]);
    return s;
}

double TwoExcitationState::norm_squared() const {
    return vec_norm_squared(pair_amps) + vec_norm_squared(photon_emitter);
}

namespace {

double block_probability(const TwoExcitationState& st, int row_block, int col_block) {
    const int n = st.grid.n_points;
    const int m = 2 * n;
    double s = 0.0;
    for (int i = row_block * n; i < (row_block + 1) * n; ++i)
        for (int j = col_block * n; j < (col_block + 1) * n; ++j)
            s += std::norm(st.pair_amps[static_cast<std::size_t>(i) * m + j]);
    return s;
}

}  // namespace

double TwoExcitationState::probability_11() const { return block_probability(*this, 0, 0); }
double TwoExcitationState::probability_22() const { return block_probability(*this, 1, 1); }
double TwoExcitationState::probability_12() const {
    return block_probability(*this, 0, 1) + block_probability(*this, 1, 0);
}

SpectralAmplitude shifted_pulse(const SpectralAmplitude& xi, double z0) {
    SpectralAmplitude out = xi;
    out.shape = PulseShape::custom;
    for (int i = 0; i < xi.grid.n_points; ++i) {
        const double ph = -xi.grid.points[i] * z0;
        out.values[i] *= cd(std::cos(ph), std::sin(ph));
    }
    return out;
}

namespace {

/// Normalized discrete amplitudes xi(k_i) e^{-i k z0} sqrt(dk).
std::vector<cd> discrete_pulse(const SpectralAmplitude& xi, double z0) {
    const int n = xi.grid.n_points;
    std::vector<cd> a(n);
    for (int i = 0; i < n; ++i) {
        const double ph = -xi.grid.points[i] * z0;
        a[i] = xi.values[i] * cd(std::cos(ph), std::sin(ph));
    }
    double norm = 0.0;
    for (const auto& v : a) norm += std::norm(v);
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& v : a) v *= scale;
    return a;
}

}  // namespace

OneExcitationState make_one_excitation(const SpectralAmplitude& xi, double z0) {
    const int n = xi.grid.n_points;
    OneExcitationState st{xi.grid, std::vector<cd>(2 * n, cd(0.0)), cd(0.0)};
    const auto a = discrete_pulse(xi, z0);
    for (int i = 0; i < n; ++i) st.photon_amps[i] = a[i];
    return st;
}

TwoExcitationState make_two_excitation(const SpectralAmplitude& xi, double z0) {
    const int n = xi.grid.n_points;
    const int m = 2 * n;
    TwoExcitationState st{xi.grid,
                          std::vector<cd>(static_cast<std::size_t>(m) * m, cd(0.0)),
                          std::vector<cd>(m, cd(0.0))};
    const auto a = discrete_pulse(xi, z0);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cd v = inv_sqrt2 * a[i] * a[j];
            st.pair_amps[static_cast<std::size_t>(i) * m + (n + j)] = v;
            st.pair_amps[static_cast<std::size_t>(n + j) * m + i] = v;
        }
    return st;
}

namespace {

struct Rk4Buffers {
    std::vector<cd> k1, k2, k3, k4, tmp;
    explicit Rk4Buffers(std::size_t size)
        : k1(size), k2(size), k3(size), k4(size), tmp(size) {}
};

template <typename Rhs>
void rk4_run(std::vector<cd>& y, double t_final, double dt, double norm0, Rhs rhs,
             const char* sector) {
    Rk4Buffers buf(y.size());
    const auto steps = static_cast<long>(std::ceil(t_final / dt));
    const double h = t_final / static_cast<double>(steps);
    for (long s = 0; s < steps; ++s) {
        rhs(y, buf.k1);
        for (std::size_t i = 0; i < y.size(); ++i) buf.tmp[i] = y[i] + 0.5 * h * buf.k1[i];
        rhs(buf.tmp, buf.k2);
        for (std::size_t i = 0; i < y.size(); ++i) buf.tmp[i] = y[i] + 0.5 * h * buf.k2[i];
        rhs(buf.tmp, buf.k3);
        for (std::size_t i = 0; i < y.size(); ++i) buf.tmp[i] = y[i] + h * buf.k3[i];
        rhs(buf.tmp, buf.k4);
        const double h6 = h / 6.0;
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] += h6 * (buf.k1[i] + 2.0 * (buf.k2[i] + buf.k3[i]) + buf.k4[i]);

        if (s % 500 == 499 || s == steps - 1) {
            const double drift = std::abs(vec_norm_squared(y) - norm0);
            if (drift > 1e-4)
                throw std::runtime_error(std::string(sector) +
                                         ": norm drift " + std::to_string(drift) +
                                         " exceeds 1e-4; reduce dt (currently " +
                                         std::to_string(dt) + ")");
        }
    }
}

}  // namespace

OneExcitationState evolve_one(const OneExcitationState& initial, const EmitterParams& p,
                              double t_final, double dt) {
    p.validate();
    const int n = initial.grid.n_points;
    const int m = 2 * n;
    const double dk = initial.grid.spacing();
    const double gd = p.coupling() * std::sqrt(dk);

    std::vector<double> omega(m);
    for (int i = 0; i < m; ++i) omega[i] = p.v_g * initial.grid.points[i % n];

    // state layout: [photon_amps (m) | emitter_amp]
    std::vector<cd> y(m + 1);
    for (int i = 0; i < m; ++i) y[i] = initial.photon_amps[i];
    y[m] = initial.emitter_amp;
    const double norm0 = vec_norm_squared(y);

    auto rhs = [&](const std::vector<cd>& s, std::vector<cd>& d) {
        const cd e = s[m];
        cd field_sum(0.0);
        for (int i = 0; i < m; ++i) {
            d[i] = cd(0.0, -1.0) * (omega[i] * s[i] + gd * e);
            field_sum += s[i];
        }
        d[m] = cd(0.0, -1.0) * (p.delta * e + gd * field_sum);
    };
    rk4_run(y, t_final, dt, norm0, rhs, "evolve_one");

    OneExcitationState out = initial;
    for (int i = 0; i < m; ++i) out.photon_amps[i] = y[i];
    out.emitter_amp = y[m];
    return out;
}

TwoExcitationState evolve_two(const TwoExcitationState& initial, const EmitterParams& p,
                              double t_final, double dt) {
    p.validate();
    const int n = initial.grid.n_points;
    const int m = 2 * n;
    const std::size_t msq = static_cast<std::size_t>(m) * m;
    const double dk = initial.grid.spacing();
    const double gd = p.coupling() * std::sqrt(dk);
    const double c_pair = gd / std::numbers::sqrt2;  // pair <- photon+emitter
    const double c_chi = gd * std::numbers::sqrt2;   // photon+emitter <- pair

    std::vector<double> omega(m);
    for (int i = 0; i < m; ++i) omega[i] = p.v_g * initial.grid.points[i % n];

    // state layout: [pair_amps (m*m) | photon_emitter (m)]
    std::vector<cd> y(msq + m);
    std::copy(initial.pair_amps.begin(), initial.pair_amps.end(), y.begin());
    std::copy(initial.photon_emitter.begin(), initial.photon_emitter.end(),
              y.begin() + msq);
    const double norm0 = vec_norm_squared(y);

    std::vector<cd> colsum(m);
    auto rhs = [&](const std::vector<cd>& s, std::vector<cd>& d) {
        const cd* chi = s.data() + msq;
        std::fill(colsum.begin(), colsum.end(), cd(0.0));
        const cd mi(0.0, -1.0);
        for (int i = 0; i < m; ++i) {
            const cd* row = s.data() + static_cast<std::size_t>(i) * m;
            cd* drow = d.data() + static_cast<std::size_t>(i) * m;
            const double wi = omega[i];
            const cd chi_i = chi[i];
            for (int j = 0; j < m; ++j) {
                drow[j] = mi * ((wi + omega[j]) * row[j] + c_pair * (chi_i + chi[j]));
                colsum[j] += row[j];
            }
        }
        cd* dchi = d.data() + msq;
        for (int j = 0; j < m; ++j)
            dchi[j] = mi * ((omega[j] + p.delta) * chi[j] + c_chi * colsum[j]);
    };
    rk4_run(y, t_final, dt, norm0, rhs, "evolve_two");

    TwoExcitationState out = initial;
    std::copy(y.begin(), y.begin() + msq, out.pair_amps.begin());
    std::copy(y.begin() + msq, y.end(), out.photon_emitter.begin());
    return out;
}

OneExcitationState smatrix_one_reference(const SpectralAmplitude& xi, double z0,
                                         const EmitterParams& p) {
    const int n = xi.grid.n_points;
    OneExcitationState st{xi.grid, std::vector<cd>(2 * n, cd(0.0)), cd(0.0)};
    const auto a = discrete_pulse(xi, z0);
    for (int i = 0; i < n; ++i) {
        st.photon_amps[i] = transmission(xi.grid.points[i], p) * a[i];
        st.photon_amps[n + i] = reflection(xi.grid.points[i], p) * a[i];
    }
    return st;
}

TwoExcitationState smatrix_two_reference(const SpectralAmplitude& xi, double z0,
                                         const EmitterParams& p,
                                         bool include_nonlinearity) {
    const auto shifted = shifted_pulse(xi, z0);
    const auto beta = product_input(shifted, shifted);
    const auto scat = scatter_two(beta, p, include_nonlinearity);

    const int n = xi.grid.n_points;
    const int m = 2 * n;
    const double dk = xi.grid.spacing();
    TwoExcitationState st{xi.grid,
                          std::vector<cd>(static_cast<std::size_t>(m) * m, cd(0.0)),
                          std::vector<cd>(m, cd(0.0))};
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            st.pair_amps[static_cast<std::size_t>(i) * m + j] = scat.b11.values[idx] * dk;
            st.pair_amps[static_cast<std::size_t>(n + i) * m + (n + j)] =
                scat.b22.values[idx] * dk;
            const cd v12 = inv_sqrt2 * scat.b12.values[idx] * dk;
            st.pair_amps[static_cast<std::size_t>(i) * m + (n + j)] = v12;
            st.pair_amps[static_cast<std::size_t>(n + j) * m + i] = v12;
        }
    }
    return st;
}

namespace {

std::vector<cd> normalized_copy(const std::vector<cd>& v) {
    std::vector<cd> out = v;
    const double scale = 1.0 / std::sqrt(vec_norm_squared(v));
    for (auto& x : out) x *= scale;
    return out;
}

}  // namespace

OracleComparison compare(const OneExcitationState& oracle_final,
                         const OneExcitationState& smatrix_state,
                         const EmitterParams& p, double free_phase_time) {
    if (oracle_final.grid.n_points != smatrix_state.grid.n_points)
        throw std::invalid_argument("compare: states on different grids");
    const int n = oracle_final.grid.n_points;
    const int m = 2 * n;

    std::vector<cd> aligned(oracle_final.photon_amps);
    for (int i = 0; i < m; ++i) {
        const double ph = p.v_g * oracle_final.grid.points[i % n] * free_phase_time;
        aligned[i] *= cd(std::cos(ph), std::sin(ph));
    }
    const auto a = normalized_copy(aligned);
    const auto b = normalized_copy(smatrix_state.photon_amps);
    cd ov(0.0);
    for (int i = 0; i < m; ++i) ov += std::conj(b[i]) * a[i];

    OracleComparison cmp;
    cmp.overlap_sq = std::norm(ov);
    const double norm_o = oracle_final.norm_squared();
    const double norm_s = smatrix_state.norm_squared();
    cmp.dp1 = oracle_final.mode_probability(1) / norm_o -
              smatrix_state.mode_probability(1) / norm_s;
    cmp.dp2 = oracle_final.mode_probability(2) / norm_o -
              smatrix_state.mode_probability(2) / norm_s;
    return cmp;
}

OracleComparison compare(const TwoExcitationState& oracle_final,
                         const TwoExcitationState& smatrix_state,
                         const EmitterParams& p, double free_phase_time) {
    if (oracle_final.grid.n_points != smatrix_state.grid.n_points)
        throw std::invalid_argument("compare: states on different grids");
    const int n = oracle_final.grid.n_points;
    const int m = 2 * n;

    std::vector<cd> phase(m);
    for (int i = 0; i < m; ++i) {
        const double ph = p.v_g * oracle_final.grid.points[i % n] * free_phase_time;
        phase[i] = cd(std::cos(ph), std::sin(ph));
    }
    std::vector<cd> aligned(oracle_final.pair_amps);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            aligned[static_cast<std::size_t>(i) * m + j] *= phase[i] * phase[j];

    const auto a = normalized_copy(aligned);
    const auto b = normalized_copy(smatrix_state.pair_amps);
    cd ov(0.0);
    for (std::size_t i = 0; i < a.size(); ++i) ov += std::conj(b[i]) * a[i];

    OracleComparison cmp;
    cmp.overlap_sq = std::norm(ov);
    const double norm_o = oracle_final.norm_squared();
    const double norm_s = smatrix_state.norm_squared();
    cmp.dp11 = oracle_final.probability_11() / norm_o -
               smatrix_state.probability_11() / norm_s;
    cmp.dp12 = oracle_final.probability_12() / norm_o -
               smatrix_state.probability_12() / norm_s;
    return cmp;
}

}  // namespace qws
