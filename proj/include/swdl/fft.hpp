#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace swdl::fft {

/// In-place radix-2 Cooley-Tukey transform; size must be a power of two.
/// Forward convention: X[k] = sum_n x[n] e^{-j 2 pi n k / N}; inverse divides
/// by N.
void transform(std::vector<std::complex<double>>& data, bool inverse);

std::size_t next_pow2(std::size_t n);

/// Linear convolution via zero-padded FFTs; result size a.size()+b.size()-1.
std::vector<std::complex<double>> linear_convolve(
    std::vector<std::complex<double>> a, std::vector<std::complex<double>> b);

} // namespace swdl::fft
