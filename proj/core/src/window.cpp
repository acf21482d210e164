#include "armm/window.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "armm/error.hpp"

namespace armm {

SymmetricWeights::SymmetricWeights(std::vector<double> half) : half_(std::move(half)) {
  if (half_.empty()) {
    throw Error(Errc::InvalidWeights, "weights need at least the center entry");
  }
  for (std::size_t k = 0; k < half_.size(); ++k) {
    if (!std::isfinite(half_[k])) {
      throw Error(Errc::NonFinite, "weight at offset " + std::to_string(k) + " is not finite");
    }
    if (half_[k] < 0.0) {
      throw Error(Errc::InvalidWeights, "weight at offset " + std::to_string(k) + " is negative");
    }
  }
}

SymmetricWeights SymmetricWeights::from_half(std::vector<double> half) { return SymmetricWeights(std::move(half)); }

SymmetricWeights SymmetricWeights::from_taps(std::span<const double> taps) {
  if (taps.size() % 2 == 0) {
    throw Error(Errc::InvalidWeights, "tap vector must have odd length, got " + std::to_string(taps.size()));
  }
  const std::size_t k_max = taps.size() / 2;
  double scale = 0.0;
  for (double t : taps) scale = std::max(scale, std::abs(t));
  std::vector<double> half(k_max + 1);
  half[0] = taps[k_max];
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double left = taps[k_max - k];
    const double right = taps[k_max + k];
    if (std::abs(left - right) > 1e-12 * scale) {
      throw Error(Errc::InvalidWeights, "weights are not symmetric at offset " + std::to_string(k));
    }
    half[k] = 0.5 * (left + right);
  }
  return SymmetricWeights(std::move(half));
}

double SymmetricWeights::at(long k) const noexcept {
  const auto a = static_cast<std::size_t>(k < 0 ? -k : k);
  return a < half_.size() ? half_[a] : 0.0;
}

std::vector<double> SymmetricWeights::taps() const {
  const std::size_t k_max = half_width();
  std::vector<double> out(2 * k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    out[k_max + k] = half_[k];
    out[k_max - k] = half_[k];
  }
  return out;
}

double SymmetricWeights::sum() const noexcept {
  // Ascending |k| order, so every caller sees the same rounding.
  double s = half_[0];
  for (std::size_t k = 1; k < half_.size(); ++k) s += 2.0 * half_[k];
  return s;
}

bool SymmetricWeights::is_tapered(std::size_t from) const noexcept {
  for (std::size_t k = from + 1; k < half_.size(); ++k) {
    if (half_[k] > half_[k - 1] * (1.0 + kTaperSlack) + 1e-300) return false;
  }
  return true;
}

SymmetricWeights SymmetricWeights::scaled(double factor) const {
  std::vector<double> half(half_);
  for (double& h : half) h *= factor;
  return SymmetricWeights(std::move(half));
}

Window::Window(const SymmetricWeights& weights) : SymmetricWeights(weights) {
  const double total = sum();
  if (!(std::abs(total - 1.0) <= kNormalizationRejectTol)) {
    throw Error(Errc::InvalidWeights, "window weights sum to " + std::to_string(total) + ", expected 1");
  }
  for (double& h : half_) h /= total;
}

TaperedWindow::TaperedWindow(const SymmetricWeights& weights) : Window(weights) {
  if (!is_tapered()) {
    throw Error(Errc::NotTapered, "window weights increase away from the center");
  }
}

void check_fits(std::size_t half_width, std::size_t n) {
  if (2 * half_width + 1 > n) {
    throw Error(Errc::WindowTooWide, "window of half-width " + std::to_string(half_width) +
                                         " does not fit a signal of length " + std::to_string(n));
  }
}

std::size_t max_half_width(std::size_t n) noexcept { return n == 0 ? 0 : (n - 1) / 2; }

TaperedWindow make_uniform_window(std::size_t m, std::size_t n) {
  check_fits(m, n);
  const double w = 1.0 / static_cast<double>(2 * m + 1);
  return TaperedWindow(SymmetricWeights::from_half(std::vector<double>(m + 1, w)));
}

SymmetricWeights make_uniform_offcenter(std::size_t m, std::size_t n) {
  if (m == 0) {
    throw Error(Errc::ZeroWidth, "off-center window needs half-width >= 1");
  }
  check_fits(m, n);
  std::vector<double> half(m + 1, 1.0 / static_cast<double>(2 * m));
  half[0] = 0.0;
  return SymmetricWeights::from_half(std::move(half));
}

}  // namespace armm
