#pragma once

#include <complex>
#include <span>
#include <vector>

namespace mixnum {

using cd = std::complex<double>;

// Unitary DFT pair (1/sqrt(N) on both directions), radix-2 sizes only.
// dft: X[f] = 1/sqrt(N) * sum_n x[n] exp(-i 2 pi f n / N)
// idft: x[n] = 1/sqrt(N) * sum_f X[f] exp(+i 2 pi f n / N)
// Throws ParameterError if the size is zero or not a power of two.
std::vector<cd> dft(std::span<const cd> x);
std::vector<cd> idft(std::span<const cd> x);

// Layout conversion between "spectral" order (index 0 = lowest frequency,
// DC at N/2) and standard DFT bin order (DC at 0). Inverse of each other.
std::vector<cd> spectral_to_fft_order(std::span<const cd> bins);
std::vector<cd> fft_to_spectral_order(std::span<const cd> bins);

bool is_pow2(std::size_t n);

} // namespace mixnum
