#pragma once

#include <complex>
#include <span>

namespace abh {

/// In-place iterative radix-2 FFT. data.size() must be a power of two.
/// Forward uses e^{-2 pi i jk/N}; the inverse is unnormalised.
void fft(std::span<std::complex<double>> data, bool inverse = false);

}  // namespace abh
