#ifndef ARMM_WINDOW_HPP
#define ARMM_WINDOW_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace armm {

/// Raw sums farther than this from 1 are rejected; anything closer is
/// silently renormalized.
inline constexpr double kNormalizationRejectTol = 1e-6;
/// Relative slack used when comparing neighbouring weights for tapering.
inline constexpr double kTaperSlack = 1e-12;

/// Nonnegative weights on offsets -K..K with w_k == w_{-k}.
/// Only the half k = 0..K is stored; the negative side is mirrored.
class SymmetricWeights {
 public:
  SymmetricWeights() : half_{1.0} {}

  /// `half[k]` is the weight at offsets +k and -k.
  static SymmetricWeights from_half(std::vector<double> half);
  /// `taps` has odd length 2K+1 and is centered at index K. Both sides must
  /// agree to 1e-12 relative.
  static SymmetricWeights from_taps(std::span<const double> taps);

  [[nodiscard]] std::size_t half_width() const noexcept { return half_.size() - 1; }
  [[nodiscard]] std::span<const double> half() const noexcept { return half_; }
  /// Weight at offset k; zero outside -K..K.
  [[nodiscard]] double at(long k) const noexcept;
  [[nodiscard]] double center() const noexcept { return half_.front(); }
  /// Full vector of length 2K+1, index K is offset 0.
  [[nodiscard]] std::vector<double> taps() const;
  [[nodiscard]] double sum() const noexcept;
  /// True when |k1| < |k2| implies w_{k1} >= w_{k2}, starting from `from`.
  [[nodiscard]] bool is_tapered(std::size_t from = 0) const noexcept;

  [[nodiscard]] SymmetricWeights scaled(double factor) const;

  friend bool operator==(const SymmetricWeights&, const SymmetricWeights&) = default;

 protected:
  explicit SymmetricWeights(std::vector<double> half);

  std::vector<double> half_;
};

/// Symmetric probability weights: nonnegative and summing to one.
class Window : public SymmetricWeights {
 public:
  Window() = default;
  /// Renormalizes when the raw sum is within 1e-6 of one, throws
  /// Errc::InvalidWeights otherwise.
  explicit Window(const SymmetricWeights& weights);
};

/// A Window that is also non-increasing in |k|.
class TaperedWindow : public Window {
 public:
  TaperedWindow() = default;
  /// Throws Errc::NotTapered when the weights increase away from the center.
  explicit TaperedWindow(const SymmetricWeights& weights);
};

/// Throws Errc::WindowTooWide unless 2K+1 <= N.
void check_fits(std::size_t half_width, std::size_t n);

/// Largest half-width that fits in a length-N circular signal.
[[nodiscard]] std::size_t max_half_width(std::size_t n) noexcept;

/// Uniform 1/(2m+1) on -m..m.
TaperedWindow make_uniform_window(std::size_t m, std::size_t n);

/// Uniform 1/(2m) on k in {-m..-1, 1..m}, zero at k = 0.
SymmetricWeights make_uniform_offcenter(std::size_t m, std::size_t n);

}  // namespace armm

#endif
