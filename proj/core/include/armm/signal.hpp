#ifndef ARMM_SIGNAL_HPP
#define ARMM_SIGNAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace armm {

/// A finite real series of length N >= 3 with circular indexing:
/// `signal[n]` resolves to `values()[n mod N]` for any integer n.
class Signal {
 public:
  /// Throws Errc::TooShort when fewer than 3 samples are given and
  /// Errc::NonFinite when any sample is NaN or infinite.
  explicit Signal(std::vector<double> values);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

  [[nodiscard]] double operator[](std::int64_t n) const noexcept {
    const auto len = static_cast<std::int64_t>(values_.size());
    auto r = n % len;
    if (r < 0) r += len;
    return values_[static_cast<std::size_t>(r)];
  }

  /// Cyclic shift: result[n] = (*this)[n + s].
  [[nodiscard]] Signal shifted(std::int64_t s) const;

  [[nodiscard]] double max_abs() const noexcept;
  [[nodiscard]] double mean() const noexcept;

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::vector<double> values_;
};

Signal make_signal(std::vector<double> values);

}  // namespace armm

#endif
