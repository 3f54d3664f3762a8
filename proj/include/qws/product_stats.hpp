#pragma once

#include "qws/emitter.hpp"
#include "qws/pulses.hpp"

namespace qws {

/// Outcome probabilities and overlap fidelities for two identical
/// counter-propagating pulses, evaluated from the same grid quadrature as
/// the dense Eq.-(25) pipeline but factorized through 1D reductions and
/// sum-axis convolutions. Runs in O(n log n) memory O(n), which admits the
/// very wide grids the Lorentzian spectral tails demand.
struct ProductScatterStats {
    double p11 = 0.0, p12 = 0.0, p22 = 0.0;
    double f_prob = 0.0;  // = p11 + p22
    double f_full = 0.0;  // overlap with the beam-splitter desired state
};

struct ProductScatterOptions {
    bool include_nonlinearity = true;
    /// Window (in units of gamma_tilde) outside which the s-factor-localized
    /// bound-state slices are truncated; 0 means the full grid. The linear
    /// reductions always run over the whole grid.
    double b_window = 0.0;
};

ProductScatterStats product_scatter_stats(const SpectralAmplitude& xi,
                                          const EmitterParams& p,
                                          const ProductScatterOptions& opts = {});

/// Grid for Lorentzian closed-form comparisons: wide enough that the k^-2
/// spectral tail biases probabilities by less than tail_budget, spaced to
/// resolve the narrower of sigma and gamma.
WavevectorGrid lorentzian_stats_grid(double sigma, double gamma, double tail_budget);

}  // namespace qws
