#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qws/emitter.hpp"
#include "qws/pulses.hpp"
#include "qws/single_photon.hpp"

namespace qws {

enum class ModePair { m11, m12, m22 };

/// Two-photon spectral amplitude beta(k,k') on grid x grid, row-major with
/// the first index on mode 1's axis. Identical-mode pairs (11/22) are
/// exchange symmetric. Product states built by product_input keep their
/// prescaled factors so the bound-state integral can run in factorized form.
struct TwoPhotonAmplitude {
    WavevectorGrid grid;
    std::vector<cd> values;  // n*n
    ModePair mode_pair = ModePair::m12;
    std::optional<std::pair<std::vector<cd>, std::vector<cd>>> factors;

    cd at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.n_points + j]; }
    cd& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.n_points + j]; }
    double norm_squared() const;  // double quadrature of |beta|^2
};

/// Scattered state of Eq.-(25) form, stored with the same normalization as
/// the input expansion so that P11 + P12 + P22 = b11^2 + b12^2 + b22^2.
struct ScatteredTwoPhotonState {
    TwoPhotonAmplitude b11, b12, b22;
    bool includes_nonlinearity = true;
};

struct TwoPhotonOutcome {
    double p11 = 0.0, p12 = 0.0, p22 = 0.0;
    double sum() const { return p11 + p12 + p22; }
};

/// Symmetrized, renormalized product of two single-photon wavepackets in
/// counter-propagating modes: beta = N [xi(k) xi2(k') + xi2(k) xi(k')].
TwoPhotonAmplitude product_input(const SpectralAmplitude& xi, const SpectralAmplitude& xi2);

/// Nonlinear bound-state term b12(p,p') = i sqrt(G)/pi s_p s_p' C(p+p') with
/// C(E) = int dk beta(k,E-k)[s_k + s_{E-k}]. Uses FFT convolutions of the
/// stored product factors; falls back to direct quadrature of the sampled
/// beta otherwise.
std::vector<cd> nonlinear_term(const TwoPhotonAmplitude& beta12, const EmitterParams& p);

/// Slow reference for nonlinear_term: triple-loop quadrature of Eq. (24)
/// against b_element, kept independent of the convolution path.
std::vector<cd> nonlinear_term_direct(const TwoPhotonAmplitude& beta12,
                                      const EmitterParams& p);

ScatteredTwoPhotonState scatter_two(const TwoPhotonAmplitude& beta12,
                                    const EmitterParams& p, bool include_nonlinearity);

TwoPhotonOutcome outcome_probabilities(const ScatteredTwoPhotonState& s);

/// Closed-form P11 for identical Lorentzian inputs, with or without the
/// nonlinear term. Oracle for the full pipeline.
double closed_form_p11_lorentzian(double sigma, double delta, const EmitterParams& p,
                                  bool include_nonlinearity);

/// P11 = a(1-a) with a the reflected spectral weight; valid only on resonance
/// for symmetric |xi|^2 and with the nonlinearity off.
double linear_resonant_p11(const SpectralAmplitude& xi, const EmitterParams& p);

/// Fidelities against the perfect 50/50 beam-splitter desired state
/// (f_spat/delta_z_opt stay unset for two-photon states).
FidelityReport fidelities_two(const ScatteredTwoPhotonState& s,
                              const TwoPhotonAmplitude& input);

/// Photon density N(z) in the moving frame, per waveguide mode. For 11 (22)
/// components both photons sit in mode 1 (2); for 12 each mode carries one.
/// Each density integrates to the photon number carried by that component.
struct PhotonDensity {
    std::vector<double> mode1, mode2;
};

PhotonDensity photon_density(const TwoPhotonAmplitude& component,
                             std::span<const double> z_points);

}  // namespace qws
