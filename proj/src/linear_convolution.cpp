#include "linear_convolution.hpp"

#include <fftw3.h>

#include <cstring>
#include <stdexcept>

namespace qws::detail {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

namespace {

void run_dft(std::vector<cd>& data, int sign) {
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(data.size()), ptr, ptr, sign,
                                      FFTW_ESTIMATE);
    if (!plan) throw std::runtime_error("fftw_plan_dft_1d failed");
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

}  // namespace

std::vector<cd> fft_forward_padded(const std::vector<cd>& a, std::size_t padded) {
    std::vector<cd> out(padded, cd(0.0));
    std::memcpy(out.data(), a.data(), a.size() * sizeof(cd));
    run_dft(out, FFTW_FORWARD);
    return out;
}

std::vector<cd> fft_backward(std::vector<cd> spectrum) {
    run_dft(spectrum, FFTW_BACKWARD);
    const double inv = 1.0 / static_cast<double>(spectrum.size());
    for (auto& v : spectrum) v *= inv;
    return spectrum;
}

std::vector<cd> linear_convolution(const std::vector<cd>& a, const std::vector<cd>& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_len = a.size() + b.size() - 1;
    const std::size_t padded = next_pow2(out_len);
    std::vector<cd> fa = fft_forward_padded(a, padded);
    std::vector<cd> fb = fft_forward_padded(b, padded);
    for (std::size_t i = 0; i < padded; ++i) fa[i] *= fb[i];
    fb.clear();
    fb.shrink_to_fit();
    std::vector<cd> conv = fft_backward(std::move(fa));
    conv.resize(out_len);
    return conv;
}

}  // namespace qws::detail
