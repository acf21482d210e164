#ifndef ARMM_FFT_HPP
#define ARMM_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace armm::fft {

using Spectrum = std::vector<std::complex<double>>;

/// Unnormalized forward DFT: X_j = sum_n x_n exp(-2 pi i j n / N).
Spectrum forward(std::span<const double> x);

/// Normalized inverse DFT: x_n = (1/N) sum_j X_j exp(2 pi i j n / N).
Spectrum inverse(std::span<const std::complex<double>> spectrum);

}  // namespace armm::fft

#endif
