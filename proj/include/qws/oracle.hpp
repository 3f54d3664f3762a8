#pragma once

#include <vector>

#include "qws/emitter.hpp"
#include "qws/pulses.hpp"
#include "qws/two_photon.hpp"

namespace qws {

/// Time-domain validation of the scattering matrix: the Hamiltonian is
/// discretized on the k grid (uniform weights, coupling g*sqrt(dk)) and the
/// Schroedinger equation integrated with classic RK4 in the one- and
/// two-excitation sectors. Combined mode index m = block * n + k_index with
/// block 0 = right-movers (mode 1), block 1 = left-movers (mode 2).
struct OneExcitationState {
    WavevectorGrid grid;
    std::vector<cd> photon_amps;  // 2n discrete amplitudes
    cd emitter_amp{0.0};

    double norm_squared() const;
    double mode_probability(int mode) const;  // mode 1 or 2
};

struct TwoExcitationState {
    WavevectorGrid grid;
    std::vector<cd> pair_amps;       // (2n)x(2n) symmetric, row-major
    std::vector<cd> photon_emitter;  // 2n: one photon + excited emitter

    int n_modes() const { return 2 * grid.n_points; }
    double norm_squared() const;
    /// Probability of both photons in mode 1 / one in each / both in mode 2,
    /// plus whatever remains on the excited emitter.
    double probability_11() const;
    double probability_12() const;
    double probability_22() const;
};

/// Right-moving pulse at moving-frame offset z0 < 0 from the emitter,
/// encoded as the phase exp(-i k z0).
SpectralAmplitude shifted_pulse(const SpectralAmplitude& xi, double z0);

OneExcitationState make_one_excitation(const SpectralAmplitude& xi, double z0);
/// Counter-propagating product state, both pulses at offset z0.
TwoExcitationState make_two_excitation(const SpectralAmplitude& xi, double z0);

/// RK4 evolution; throws if the norm drifts by more than 1e-4.
OneExcitationState evolve_one(const OneExcitationState& initial, const EmitterParams& p,
                              double t_final, double dt);
TwoExcitationState evolve_two(const TwoExcitationState& initial, const EmitterParams& p,
                              double t_final, double dt);

/// S-matrix predictions mapped onto the oracle's discrete amplitudes.
OneExcitationState smatrix_one_reference(const SpectralAmplitude& xi, double z0,
                                         const EmitterParams& p);
TwoExcitationState smatrix_two_reference(const SpectralAmplitude& xi, double z0,
                                         const EmitterParams& p,
                                         bool include_nonlinearity = true);

struct OracleComparison {
    double overlap_sq = 0.0;  // |<smatrix|oracle>|^2 after phase alignment
    double dp1 = 0.0, dp2 = 0.0;      // one-excitation probability deltas
    double dp11 = 0.0, dp12 = 0.0;    // two-excitation probability deltas
};

/// Removes the free-evolution phases accumulated over free_phase_time and
/// compares with the S-matrix state (both normalized before the overlap).
OracleComparison compare(const OneExcitationState& oracle_final,
                         const OneExcitationState& smatrix_state,
                         const EmitterParams& p, double free_phase_time);
OracleComparison compare(const TwoExcitationState& oracle_final,
                         const TwoExcitationState& smatrix_state,
                         const EmitterParams& p, double free_phase_time);

}  // namespace qws
