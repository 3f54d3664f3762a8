#pragma once

#include <complex>
#include <vector>

namespace qws::detail {

using cd = std::complex<double>;

/// Full linear convolution c[m] = sum_i a[i] b[m-i], length |a|+|b|-1,
/// via zero-padded FFTs (FFTW, complex double).
std::vector<cd> linear_convolution(const std::vector<cd>& a, const std::vector<cd>& b);

/// In-place forward/backward complex DFT helpers used by linear_convolution;
/// exposed for reuse by callers that batch several products over one pad size.
std::vector<cd> fft_forward_padded(const std::vector<cd>& a, std::size_t padded);
std::vector<cd> fft_backward(std::vector<cd> spectrum);  // unnormalized inverse / N

std::size_t next_pow2(std::size_t n);

}  // namespace qws::detail
