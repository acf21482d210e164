#include "armm/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "armm/error.hpp"

namespace armm {

Signal::Signal(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 3) {
    throw Error(Errc::TooShort, "signal needs at least 3 samples, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(Errc::NonFinite, "sample " + std::to_string(i) + " is not finite");
    }
  }
}

Signal Signal::shifted(std::int64_t s) const {
  std::vector<double> out(values_.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = (*this)[static_cast<std::int64_t>(n) + s];
  }
  return Signal(std::move(out));
}

double Signal::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double Signal::mean() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

Signal make_signal(std::vector<double> values) { return Signal(std::move(values)); }

}  // namespace armm
