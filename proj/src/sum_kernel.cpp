#include "sum_kernel.hpp"

#include "linear_convolution.hpp"

namespace qws::detail {

namespace {

IndexedConv indexed_conv(int i0_a, const std::vector<cd>& a, int i0_b,
                         const std::vector<cd>& b) {
    return IndexedConv{i0_a + i0_b, linear_convolution(a, b)};
}

void add_into(IndexedConv& acc, const IndexedConv& term) {
    // all kernel terms share s0 and length by construction
    for (std::size_t i = 0; i < acc.v.size(); ++i) acc.v[i] += term.v[i];
}

}  // namespace

IndexedConv bound_state_kernel(std::span<const cd> f, std::span<const cd> fp,
                               const WavevectorGrid& grid, const EmitterParams& p,
                               int a0, int a1, int b0, int b1) {
    const bool identical = f.data() == fp.data();
    std::vector<cd> s(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) s[i] = s_factor(grid.points[i], p);

    auto slice = [&](std::span<const cd> src, int lo, int hi, bool weighted,
                     bool s_times) {
        std::vector<cd> out(hi - lo);
        for (int i = lo; i < hi; ++i) {
            cd v = src[i];
            if (weighted) v *= grid.weights[i];
            if (s_times) v *= s[i];
            out[i - lo] = v;
        }
        return out;
    };

    const auto wfs_a = slice(f, a0, a1, true, true);    // w f s  on A
    const auto fs_a = slice(f, a0, a1, false, true);    // f s    on A
    const auto f_b = slice(f, b0, b1, false, false);    // f      on B
    const auto wf_b = slice(f, b0, b1, true, false);    // w f    on B

    // sum_l (w f s)_l fp_{m-l}  +  sum_l (w fp)_l (f s)_{m-l}
    IndexedConv c = indexed_conv(a0, wfs_a, b0, identical ? f_b : slice(fp, b0, b1, false, false));
    add_into(c, indexed_conv(b0, identical ? wf_b : slice(fp, b0, b1, true, false), a0, fs_a));
    if (identical) {
        for (auto& v : c.v) v *= 2.0;
        return c;
    }
    // sum_l (w fp s)_l f_{m-l}  +  sum_l (w f)_l (fp s)_{m-l}
    add_into(c, indexed_conv(a0, slice(fp, a0, a1, true, true), b0, f_b));
    add_into(c, indexed_conv(b0, wf_b, a0, slice(fp, a0, a1, false, true)));
    return c;
}

namespace {

template <typename Op>
cd reduce(const IndexedConv& c, const IndexedConv& x, Op op) {
    const int lo = std::max(c.s0, x.s0);
    const int hi = std::min(c.s0 + static_cast<int>(c.v.size()),
                            x.s0 + static_cast<int>(x.v.size()));
    cd sum(0.0);
    for (int m = lo; m < hi; ++m) sum += op(c.v[m - c.s0], x.v[m - x.s0]);
    return sum;
}

}  // namespace

cd reduce_conj_mul(const IndexedConv& c, const IndexedConv& x) {
    return reduce(c, x, [](cd a, cd b) { return std::conj(a) * b; });
}

cd reduce_mul(const IndexedConv& c, const IndexedConv& x) {
    return reduce(c, x, [](cd a, cd b) { return a * b; });
}

cd reduce_abs2_mul(const IndexedConv& c, const IndexedConv& x) {
    return reduce(c, x, [](cd a, cd b) { return std::norm(a) * b; });
}

}  // namespace qws::detail
