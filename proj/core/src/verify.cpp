#include "armm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "armm/error.hpp"

namespace armm::verify {
namespace {

std::size_t wrap(long i, std::size_t n) {
  const auto len = static_cast<long>(n);
  return static_cast<std::size_t>(((i % len) + len) % len);
}

}  // namespace

CirculantSystem build_circulant(const Signal& y_bar, const ARKernel& kernel) {
  const std::size_t n = y_bar.size();
  check_fits(kernel.half_width(), n);
  CirculantSystem sys;
  sys.n = n;
  sys.matrix.assign(n * n, 0.0);
  sys.rhs.assign(y_bar.values().begin(), y_bar.values().end());
  const auto k_max = static_cast<long>(kernel.half_width());
  for (std::size_t i = 0; i < n; ++i) {
    for (long k = -k_max; k <= k_max; ++k) {
      sys.matrix[i * n + wrap(static_cast<long>(i) + k, n)] += kernel.at(k);
    }
  }
  return sys;
}

Signal solve_dense(const Signal& y_bar, const ARKernel& kernel) {
  const std::size_t n = y_bar.size();
  if (n > kMaxOracleSize) {
    throw Error(Errc::TooLargeForOracle, "dense oracle is limited to " + std::to_string(kMaxOracleSize) +
                                             " samples, got " + std::to_string(n));
  }
  CirculantSystem sys = build_circulant(y_bar, kernel);
  auto& a = sys.matrix;
  auto& b = sys.rhs;
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    if (std::abs(a[piv * n + col]) <= 1e-14 * scale) {
      throw Error(Errc::SingularSystem, "circulant system is singular at column " + std::to_string(col));
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i * n + c] * x[c];
    x[i] = acc / a[i * n + i];
  }
  return Signal(std::move(x));
}

std::vector<double> circulant_eigenvalues(const ARKernel& kernel, std::size_t n) {
  check_fits(kernel.half_width(), n);
  std::vector<double> row(n, 0.0);
  const auto k_max = static_cast<long>(kernel.half_width());
  for (long k = -k_max; k <= k_max; ++k) row[wrap(k, n)] += kernel.at(k);
  std::vector<double> eig(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += row[j] * std::cos(2.0 * std::numbers::pi * static_cast<double>((j * m) % n) / static_cast<double>(n));
    }
    eig[m] = acc;
  }
  return eig;
}

Signal finite_diff_gradient(const Objective& f, const Signal& x, double h) {
  std::vector<double> pt(x.values().begin(), x.values().end());
  std::vector<double> grad(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) {
    const double orig = pt[i];
    const double step = h * std::max(1.0, std::abs(orig));
    pt[i] = orig + step;
    const double up = f(Signal(pt));
    pt[i] = orig - step;
    const double down = f(Signal(pt));
    pt[i] = orig;
    grad[i] = (up - down) / (2.0 * step);
  }
  return Signal(std::move(grad));
}

NaiveObjectives naive_objectives(const Signal& x, const Signal& y, const Theta& theta) {
  if (x.size() != y.size()) {
    throw Error(Errc::LengthMismatch, "signal lengths differ");
  }
  const std::size_t n = y.size();
  const auto ka = static_cast<long>(theta.alpha().half_width());
  const auto kb = static_cast<long>(theta.beta().half_width());
  const auto xs = x.values();
  const auto ys = y.values();

  double a_mass = 0.0;
  for (long k = -ka; k <= ka; ++k) a_mass += theta.alpha().at(k);

  NaiveObjectives out{0.0, 0.0, 0.0};
  double smooth = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto li = static_cast<long>(i);
    double y_bar = 0.0;
    for (long k = -ka; k <= ka; ++k) y_bar += theta.alpha().at(k) * ys[wrap(li + k, n)];
    y_bar /= a_mass;
    for (long k = -ka; k <= ka; ++k) {
      const double a = theta.alpha().at(k);
      const double fit = ys[wrap(li + k, n)] - xs[i];
      const double scatter = ys[wrap(li + k, n)] - y_bar;
      out.g += a * fit * fit;
      out.h0 += a * scatter * scatter;
    }
    for (long k = -kb; k <= kb; ++k) {
      const double d = xs[wrap(li + k, n)] - xs[i];
      smooth += theta.beta().at(k) * d * d;
    }
    out.h += a_mass * (y_bar - xs[i]) * (y_bar - xs[i]);
  }
  out.g += smooth;
  out.h += smooth;
  return out;
}

double naive_objective_F(const Signal& x, const Signal& y, std::span<const double> w_taps) {
  if (x.size() != y.size()) {
    throw Error(Errc::LengthMismatch, "signal lengths differ");
  }
  const std::size_t n = y.size();
  const auto k_max = static_cast<long>(w_taps.size() / 2);
  const auto xs = x.values();
  const auto ys = y.values();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto li = static_cast<long>(i);
    for (long k = -k_max; k <= k_max; ++k) {
      const double z = (k == 0) ? ys[i] : xs[wrap(li + k, n)];
      const double d = z - xs[i];
      total += w_taps[static_cast<std::size_t>(k + k_max)] * d * d;
    }
  }
  return total;
}

double max_relative_deviation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::LengthMismatch, "vectors differ in length");
  }
  double scale = 0.0;
  for (double v : b) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst / scale;
}

}  // namespace armm::verify
