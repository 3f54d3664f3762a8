#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qws {

/// Two-level emitter in the rotating frame. Internal units fix v_g = 1, so
/// gamma_tilde = Gamma/v_g carries wavevector units and every other scale
/// (sigma, delta, k) is expressed relative to it.
struct EmitterParams {
    double gamma_tilde = 1.0;  // decay rate Gamma/v_g
    double delta = 0.0;        // detuning omega_0 - k_p v_g, as a wavevector
    double v_g = 1.0;          // group velocity (fixed 1 internally)

    /// Waveguide coupling g with Gamma = 4*pi*g^2/v_g.
    double coupling() const {
        return std::sqrt(gamma_tilde * v_g * v_g / (4.0 * std::numbers::pi));
    }

    void validate() const {
        if (gamma_tilde <= 0.0)
            throw std::invalid_argument("EmitterParams: gamma_tilde must be positive");
        if (v_g <= 0.0)
            throw std::invalid_argument("EmitterParams: v_g must be positive");
    }
};

/// Single-photon transmission coefficient t(k) = (k-d)/(k-d+i*G/2).
inline std::complex<double> transmission(double k, const EmitterParams& p) {
    const double x = k - p.delta;
    return std::complex<double>(x, 0.0) / std::complex<double>(x, 0.5 * p.gamma_tilde);
}

/// Single-photon reflection coefficient r(k) = -i*(G/2)/(k-d+i*G/2); r = t - 1.
inline std::complex<double> reflection(double k, const EmitterParams& p) {
    const double x = k - p.delta;
    return std::complex<double>(0.0, -0.5 * p.gamma_tilde) /
           std::complex<double>(x, 0.5 * p.gamma_tilde);
}

/// Resonance factor s(k) = sqrt(G)/(k-d+i*G/2) entering the two-photon
/// scattering element.
inline std::complex<double> s_factor(double k, const EmitterParams& p) {
    const double x = k - p.delta;
    return std::sqrt(p.gamma_tilde) / std::complex<double>(x, 0.5 * p.gamma_tilde);
}

/// Two-photon element B = i*sqrt(G)/pi * s_p s_p' (s_k + s_k'), symmetric in
/// (p,p') and in (k,k').
inline std::complex<double> b_element(double p1, double p2, double k1, double k2,
                                      const EmitterParams& p) {
    const std::complex<double> pref(0.0, std::sqrt(p.gamma_tilde) / std::numbers::pi);
    return pref * s_factor(p1, p) * s_factor(p2, p) *
           (s_factor(k1, p) + s_factor(k2, p));
}

}  // namespace qws
