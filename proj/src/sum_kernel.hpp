#pragma once

#include <span>
#include <vector>

#include "qws/emitter.hpp"
#include "qws/grid.hpp"

namespace qws::detail {

/// Convolution values indexed by the global sum index: element m of v
/// corresponds to E = k[0] + k[0] + (s0 + m) * spacing with s0 = i0_a + i0_b.
struct IndexedConv {
    int s0 = 0;
    std::vector<cd> v;
};

/// C(E) = int dk [f(k) fp(E-k) + fp(k) f(E-k)] (s_k + s_{E-k}) regrouped into
/// four linear convolutions with the grid weights attached to the integration
/// index, so the result matches direct quadrature to FFT roundoff.
/// [a0,a1) windows the s-weighted slices, [b0,b1) the plain ones; pass the
/// full range for an exact kernel. Passing the same span twice halves the
/// FFT work for identical factors.
IndexedConv bound_state_kernel(std::span<const cd> f, std::span<const cd> fp,
                               const WavevectorGrid& grid, const EmitterParams& p,
                               int a0, int a1, int b0, int b1);

// Reductions over the overlap of two sum-indexed arrays.
cd reduce_conj_mul(const IndexedConv& c, const IndexedConv& x);  // sum conj(c)*x
cd reduce_mul(const IndexedConv& c, const IndexedConv& x);       // sum c*x
cd reduce_abs2_mul(const IndexedConv& c, const IndexedConv& x);  // sum |c|^2*x

}  // namespace qws::detail
