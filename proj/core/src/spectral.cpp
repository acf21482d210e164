#include "armm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "armm/error.hpp"
#include "armm/fft.hpp"

namespace armm {
namespace {

std::size_t half_width_of(std::span<const double> taps) {
  if (taps.size() % 2 == 0) {
    throw Error(Errc::InvalidWeights, "tap vector must have odd length, got " + std::to_string(taps.size()));
  }
  return taps.size() / 2;
}

void check_length(std::size_t n) {
  if (n < 3) {
    throw Error(Errc::TooShort, "signal length must be at least 3, got " + std::to_string(n));
  }
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Real part of an inverse transform after checking that the imaginary part
// is rounding noise relative to `scale`.
std::vector<double> real_part(const fft::Spectrum& z, double scale, const char* what) {
  std::vector<double> re(z.size());
  double residue = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    re[i] = z[i].real();
    residue = std::max(residue, std::abs(z[i].imag()));
  }
  scale = std::max(scale, max_abs(re));
  if (residue > kImaginaryResidueTol * scale) {
    throw Error(Errc::ImaginaryResidue, std::string(what) + ": imaginary residue " + std::to_string(residue));
  }
  return re;
}

// Kernel placed cyclically on 0..N-1: entry (k mod N) holds v_k.
std::vector<double> place_cyclic(std::span<const double> taps, std::size_t n) {
  const auto k_max = static_cast<long>(taps.size() / 2);
  const auto len = static_cast<long>(n);
  std::vector<double> out(n, 0.0);
  for (long k = -k_max; k <= k_max; ++k) {
    out[static_cast<std::size_t>(((k % len) + len) % len)] += taps[static_cast<std::size_t>(k + k_max)];
  }
  return out;
}

}  // namespace

Signal circular_convolve_direct(const Signal& x, std::span<const double> taps) {
  const std::size_t k_max = half_width_of(taps);
  const std::size_t n = x.size();
  check_fits(k_max, n);
  const auto values = x.values();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < taps.size(); ++i) {
    const double w = taps[i];
    if (w == 0.0) continue;
    // offset k = i - K; source index (m + k) mod N, split into two runs.
    const std::size_t shift = (i + n - k_max) % n;
    for (std::size_t m = 0; m + shift < n; ++m) out[m] += w * values[m + shift];
    for (std::size_t m = n - shift; m < n; ++m) out[m] += w * values[m + shift - n];
  }
  return Signal(std::move(out));
}

Signal circular_convolve_fft(const Signal& x, std::span<const double> taps) {
  const std::size_t k_max = half_width_of(taps);
  const std::size_t n = x.size();
  check_fits(k_max, n);
  const auto xs = fft::forward(x.values());
  const auto hs = fft::forward(place_cyclic(taps, n));
  fft::Spectrum prod(n);
  // out_n = sum_m h_m x_{n+m} is a correlation: DFT(out) = X * conj(H).
  for (std::size_t j = 0; j < n; ++j) prod[j] = xs[j] * std::conj(hs[j]);
  return Signal(real_part(fft::inverse(prod), x.max_abs() * max_abs(taps), "circular_convolve"));
}

Signal circular_convolve(const Signal& x, std::span<const double> taps) {
  return half_width_of(taps) <= kDirectConvolutionMaxHalfWidth ? circular_convolve_direct(x, taps)
                                                                : circular_convolve_fft(x, taps);
}

Signal circular_convolve(const Signal& x, const SymmetricWeights& weights) {
  const auto taps = weights.taps();
  return circular_convolve(x, std::span<const double>(taps));
}

ARKernel ARKernel::from_half(std::vector<double> half) {
  if (half.empty()) {
    throw Error(Errc::InvalidWeights, "kernel needs at least the center coefficient");
  }
  for (double h : half) {
    if (!std::isfinite(h)) throw Error(Errc::NonFinite, "kernel coefficient is not finite");
  }
  if (!(half[0] > 0.0)) {
    throw Error(Errc::InvalidWeights, "kernel center coefficient must be positive");
  }
  double total = half[0];
  for (std::size_t k = 1; k < half.size(); ++k) {
    if (half[k] > 0.0) {
      throw Error(Errc::InvalidWeights, "off-center kernel coefficient at offset " + std::to_string(k) + " is positive");
    }
    total += 2.0 * half[k];
  }
  if (std::abs(total - 1.0) > 1e-12 * std::max(1.0, half[0])) {
    throw Error(Errc::InvalidWeights, "kernel coefficients sum to " + std::to_string(total) + ", expected 1");
  }
  return ARKernel(std::move(half));
}

double ARKernel::at(long k) const noexcept {
  const auto a = static_cast<std::size_t>(k < 0 ? -k : k);
  return a < half_.size() ? half_[a] : 0.0;
}

std::vector<double> ARKernel::taps() const {
  const std::size_t k_max = half_width();
  std::vector<double> out(2 * k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    out[k_max + k] = half_[k];
    out[k_max - k] = half_[k];
  }
  return out;
}

bool ARKernel::is_identity() const noexcept {
  return std::all_of(half_.begin() + 1, half_.end(), [](double h) { return h == 0.0; });
}

ARKernel build_ar_kernel(const Window& w) {
  const double w0 = w.center();
  if (!(w0 > 0.0)) {
    throw Error(Errc::DegenerateCenterWeight, "w_0 = 0: every constant signal minimizes the objective");
  }
  const auto wh = w.half();
  std::vector<double> half(wh.size());
  half[0] = 2.0 / w0 - 1.0;
  for (std::size_t k = 1; k < wh.size(); ++k) half[k] = -2.0 * wh[k] / w0;
  return ARKernel::from_half(std::move(half));
}

ARKernel build_ar_kernel_theta(const Theta& theta) {
  const double a = theta.mass_a();
  if (!(a > 0.0)) {
    throw Error(Errc::ZeroDataMass, "alpha has zero mass");
  }
  const auto beta = theta.beta().half();
  std::vector<double> half(beta.size());
  half[0] = (a + 2.0 * theta.mass_b()) / a;
  for (std::size_t k = 1; k < beta.size(); ++k) half[k] = -2.0 * beta[k] / a;
  return ARKernel::from_half(std::move(half));
}

std::vector<double> spectrum_v(const ARKernel& kernel, std::size_t n) {
  check_length(n);
  check_fits(kernel.half_width(), n);
  if (kernel.half_width() > kClosedFormSpectrumMaxHalfWidth) return spectrum_v_dft(kernel, n);
  const auto half = kernel.half();
  std::vector<double> v(n, 1.0);
  for (std::size_t j = 1; j < n; ++j) {
    double acc = 1.0;
    for (std::size_t k = 1; k < half.size(); ++k) {
      // 1 - cos(2 pi k j / N) = 2 sin^2(pi (k j mod N) / N); every term >= 0.
      const double s = std::sin(std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n));
      acc += -4.0 * half[k] * s * s;
    }
    v[j] = acc;
  }
  return v;
}

std::vector<double> spectrum_v_dft(const ARKernel& kernel, std::size_t n) {
  check_length(n);
  check_fits(kernel.half_width(), n);
  const auto taps = kernel.taps();
  const auto spec = fft::forward(place_cyclic(taps, n));
  std::vector<double> v(n);
  double residue = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    v[j] = spec[j].real();
    residue = std::max(residue, std::abs(spec[j].imag()));
  }
  if (residue > kImaginaryResidueTol * max_abs(v)) {
    throw Error(Errc::ImaginaryResidue, "spectrum of a symmetric kernel is not real");
  }
  return v;
}

Signal deconvolve(const Signal& y_bar, const ARKernel& kernel) {
  const std::size_t n = y_bar.size();
  check_fits(kernel.half_width(), n);
  const auto v = spectrum_v(kernel, n);
  auto spec = fft::forward(y_bar.values());
  for (std::size_t j = 0; j < n; ++j) spec[j] /= v[j];
  return Signal(real_part(fft::inverse(spec), y_bar.max_abs(), "deconvolve"));
}

double characteristic_polynomial(const ARKernel& kernel, double r) noexcept {
  const auto half = kernel.half();
  double acc = half[0];
  double rk = 1.0;
  double rinv_k = 1.0;
  const double rinv = 1.0 / r;
  for (std::size_t k = 1; k < half.size(); ++k) {
    rk *= r;
    rinv_k *= rinv;
    acc += half[k] * (rk + rinv_k);
  }
  return acc;
}

double characteristic_root(const ARKernel& kernel) {
  if (kernel.is_identity()) {
    throw Error(Errc::NoSmoothingTerm, "kernel has no off-center coefficients");
  }
  constexpr double eps = 1e-12;
  constexpr int max_iter = 200;
  double lo = eps;
  double hi = 1.0 - eps;
  // Lambda -> -inf at 0+, Lambda(1) = 1 and Lambda is increasing in between.
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (characteristic_polynomial(kernel, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(characteristic_polynomial(kernel, lo)) < std::abs(characteristic_polynomial(kernel, hi)) ? lo : hi;
}

double SpectrumReport::min_v() const noexcept {
  return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
}

namespace {

// LU factorization without pivoting of the circulant matrix
// C[i][(i + k) mod N] = v_k. Nonzeros of C and of its factors live in the
// band |i - j| <= K, the last K columns and the last K rows, so storage and
// work are O(N K) and O(N K^2).
class CirculantBandLU {
 public:
  CirculantBandLU(const ARKernel& kernel, std::size_t n)
      : n_(n),
        k_(kernel.half_width()),
        m_(n - k_),
        band_(m_ * (2 * k_ + 1), 0.0),
        right_(m_ * k_, 0.0),
        bottom_(k_ * n, 0.0) {
    const auto kk = static_cast<long>(k_);
    const auto len = static_cast<long>(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (long k = -kk; k <= kk; ++k) {
        const auto j = static_cast<std::size_t>(((static_cast<long>(i) + k) % len + len) % len);
        ref(i, j) = kernel.at(k);
      }
    }
    factor();
  }

  // Solves C x = b.
  [[nodiscard]] std::vector<double> solve(std::vector<double> b) const {
    for (std::size_t j = 0; j < n_; ++j) {
      const double zj = b[j];
      if (zj == 0.0) continue;
      for_lower_rows(j, [&](std::size_t i) { b[i] -= get(i, j) * zj; });
    }
    for (std::size_t jj = n_; jj-- > 0;) {
      double acc = b[jj];
      for_upper_cols(jj, [&](std::size_t c) { acc -= get(jj, c) * b[c]; });
      b[jj] = acc / get(jj, jj);
    }
    return b;
  }

 private:
  double& ref(std::size_t i, std::size_t j) {
    if (i >= m_) return bottom_[(i - m_) * n_ + j];
    if (j >= m_) return right_[i * k_ + (j - m_)];
    return band_[i * (2 * k_ + 1) + (j + k_ - i)];
  }

  [[nodiscard]] double get(std::size_t i, std::size_t j) const {
    if (i >= m_) return bottom_[(i - m_) * n_ + j];
    if (j >= m_) return right_[i * k_ + (j - m_)];
    if (j + k_ < i || i + k_ < j) return 0.0;
    return band_[i * (2 * k_ + 1) + (j + k_ - i)];
  }

  // Rows i > j that may hold a nonzero in column j.
  template <typename Fn>
  void for_lower_rows(std::size_t j, Fn&& fn) const {
    const std::size_t band_end = std::min(j + k_, m_ - 1);
    for (std::size_t i = j + 1; i <= band_end && j < m_; ++i) fn(i);
    for (std::size_t i = std::max(m_, j + 1); i < n_; ++i) fn(i);
  }

  // Columns c > j that may hold a nonzero in row j.
  template <typename Fn>
  void for_upper_cols(std::size_t j, Fn&& fn) const {
    if (j < m_) {
      const std::size_t band_end = std::min(j + k_, m_ - 1);
      for (std::size_t c = j + 1; c <= band_end; ++c) fn(c);
    }
    for (std::size_t c = std::max(m_, j + 1); c < n_; ++c) fn(c);
  }

  void factor() {
    for (std::size_t j = 0; j < n_; ++j) {
      const double pivot = get(j, j);
      if (!(pivot > 0.0)) {
        throw Error(Errc::SingularSystem, "non-positive pivot in circulant elimination");
      }
      for_lower_rows(j, [&](std::size_t i) {
        double& lij = ref(i, j);
        if (lij == 0.0) return;
        lij /= pivot;
        const double l = lij;
        for_upper_cols(j, [&](std::size_t c) { ref(i, c) -= l * get(j, c); });
      });
    }
  }

  std::size_t n_;
  std::size_t k_;
  std::size_t m_;
  std::vector<double> band_;
  std::vector<double> right_;
  std::vector<double> bottom_;
};

}  // namespace

SpectrumReport effective_window(const ARKernel& kernel, std::size_t n) {
  check_length(n);
  SpectrumReport report;
  report.v = spectrum_v(kernel, n);
  std::vector<double> delta(n, 0.0);
  delta[0] = 1.0;
  report.u = CirculantBandLU(kernel, n).solve(std::move(delta));
  if (!kernel.is_identity()) report.r_star = characteristic_root(kernel);
  return report;
}

std::vector<double> effective_window_dft(const ARKernel& kernel, std::size_t n) {
  const auto v = spectrum_v(kernel, n);
  fft::Spectrum inv(n);
  for (std::size_t j = 0; j < n; ++j) inv[j] = 1.0 / v[j];
  return real_part(fft::inverse(inv), 1.0, "effective_window_dft");
}

}  // namespace armm
