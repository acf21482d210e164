#ifndef ARMM_SPECTRAL_HPP
#define ARMM_SPECTRAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "armm/signal.hpp"
#include "armm/theta.hpp"
#include "armm/window.hpp"

namespace armm {

/// Convolutions with half-width above this go through the FFT.
inline constexpr std::size_t kDirectConvolutionMaxHalfWidth = 32;
/// spectrum_v uses the cosine-sum closed form up to this half-width.
inline constexpr std::size_t kClosedFormSpectrumMaxHalfWidth = 32;
/// Imaginary parts of inverse transforms must stay below this times ||x||.
inline constexpr double kImaginaryResidueTol = 1e-9;

/// out_n = sum_k taps[K + k] * x_{n+k}, cyclic. `taps` has odd length 2K+1
/// with 2K+1 <= N (Errc::WindowTooWide otherwise). No sign constraints.
Signal circular_convolve(const Signal& x, std::span<const double> taps);
Signal circular_convolve(const Signal& x, const SymmetricWeights& weights);

/// Direct O(N K) summation, regardless of K.
Signal circular_convolve_direct(const Signal& x, std::span<const double> taps);
/// FFT path, regardless of K.
Signal circular_convolve_fft(const Signal& x, std::span<const double> taps);

/// Symmetric deconvolution kernel v with v_0 > 0, v_k <= 0 (k != 0) and
/// sum_k v_k = 1. The minimizer x of the smoothing objective satisfies
/// v (*) x = ybar.
class ARKernel {
 public:
  /// Validates the invariants above; `half[k]` is v_{+-k}.
  static ARKernel from_half(std::vector<double> half);

  [[nodiscard]] std::size_t half_width() const noexcept { return half_.size() - 1; }
  [[nodiscard]] std::span<const double> half() const noexcept { return half_; }
  [[nodiscard]] double at(long k) const noexcept;
  [[nodiscard]] std::vector<double> taps() const;
  [[nodiscard]] bool is_identity() const noexcept;

  friend bool operator==(const ARKernel&, const ARKernel&) = default;

 private:
  explicit ARKernel(std::vector<double> half) : half_(std::move(half)) {}

  std::vector<double> half_;
};

/// v_0 = 2 / w_0 - 1, v_k = -2 w_k / w_0. Errc::DegenerateCenterWeight when w_0 = 0.
ARKernel build_ar_kernel(const Window& w);

/// v_0 = (A + 2B) / A, v_k = -2 beta_k / A. Errc::ZeroDataMass when A = 0.
ARKernel build_ar_kernel_theta(const Theta& theta);

/// DFT of the cyclically placed kernel. Real by symmetry and >= 1 everywhere:
///   V_n = 1 + sum_{k>=1} (-2 v_k) (1 - cos(2 pi k n / N)).
std::vector<double> spectrum_v(const ARKernel& kernel, std::size_t n);

/// Same quantity through a complex FFT of the zero-padded kernel. The
/// imaginary residue is checked and dropped.
std::vector<double> spectrum_v_dft(const ARKernel& kernel, std::size_t n);

/// x = IDFT(DFT(ybar) / V). Errc::WindowTooWide when the kernel does not fit.
Signal deconvolve(const Signal& y_bar, const ARKernel& kernel);

/// Lambda(r) = v_0 + sum_{k>=1} v_k (r^k + r^-k).
double characteristic_polynomial(const ARKernel& kernel, double r) noexcept;

/// Unique root of Lambda in (0, 1), by bisection on [1e-12, 1 - 1e-12].
/// Errc::NoSmoothingTerm when every off-center coefficient is zero.
double characteristic_root(const ARKernel& kernel);

struct SpectrumReport {
  std::vector<double> v;  // V_n, n = 0..N-1
  std::vector<double> u;  // effective window, u[k] at offset k mod N
  std::optional<double> r_star;

  [[nodiscard]] double min_v() const noexcept;
};

/// Effective window u with v (*) u = delta, i.e. u = IDFT(1 / V).
///
/// u is computed by eliminating the circulant system directly: v is an
/// M-matrix stencil, so elimination and substitution with a nonnegative
/// right-hand side involve no cancellation and every u_k keeps full relative
/// accuracy, including the exponentially small tail entries that the inverse
/// FFT would bury under its absolute rounding floor.
SpectrumReport effective_window(const ARKernel& kernel, std::size_t n);

/// u = IDFT(1 / V) evaluated with the FFT. Accurate to ~1e-16 absolute.
std::vector<double> effective_window_dft(const ARKernel& kernel, std::size_t n);

}  // namespace armm

#endif
