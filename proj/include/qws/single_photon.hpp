#pragma once

#include <optional>
#include <utility>

#include "qws/emitter.hpp"
#include "qws/pulses.hpp"

namespace qws {

/// Post-scattering single-photon state: transmitted stays in mode 1,
/// reflected goes to mode 2. Unitarity keeps the summed norm equal to the
/// input norm.
struct ScatteredOnePhoton {
    SpectralAmplitude transmitted;  // t(p) xi(p)
    SpectralAmplitude reflected;    // r(p) xi(p)
};

/// The four fidelity measures against a shape-preserving desired state,
/// ordered F_full <= F_int <= F_prob with F_spat <= F_int. delta_z_opt is the
/// displacement of the scattered pulse that maximizes the spatial overlap;
/// both spatial fields are unset for two-photon reports.
struct FidelityReport {
    double f_full = 0.0;
    double f_int = 0.0;
    std::optional<double> f_spat;
    double f_prob = 0.0;
    std::optional<double> delta_z_opt;
};

ScatteredOnePhoton scatter_one(const SpectralAmplitude& xi, const EmitterParams& p);

/// Transmission/reflection probabilities, normalized so P1 + P2 = 1 for the
/// wavepacket as realized on the grid.
std::pair<double, double> probabilities(const ScatteredOnePhoton& s);

struct SpatialSearch {
    double window = 20.0;  // search |dz| <= window/gamma_tilde
    int coarse_points = 4001;
};

/// All four fidelities for the fully-reflected desired state. Integrals use
/// the raw wavepacket values so the Lorentzian closed forms are reproduced.
FidelityReport fidelities_one(const ScatteredOnePhoton& s, const SpectralAmplitude& xi,
                              const EmitterParams& p, const SpatialSearch& search = {});

/// Closed forms for a Lorentzian input: F_full = G^2/((G+s)^2+4d^2) and
/// F_prob = (G+s)G/((G+s)^2+4d^2). Oracle for fidelities_one.
std::pair<double, double> lorentzian_closed_forms_one(double sigma, double delta,
                                                      const EmitterParams& p);

}  // namespace qws
