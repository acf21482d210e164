#include "armm/smoother.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "armm/error.hpp"

namespace armm {
namespace {

void check_same_length(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::LengthMismatch,
                "signal lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

// sum_n (a_{n+k} - b_n)^2
double shifted_sq_distance(const Signal& a, const Signal& b, long k) {
  double acc = 0.0;
  const auto n = static_cast<std::int64_t>(b.size());
  for (std::int64_t i = 0; i < n; ++i) {
    const double d = a[i + k] - b[i];
    acc += d * d;
  }
  return acc;
}

// sum_{n, k != 0} beta_k (x_{n+k} - x_n)^2. The k and -k sums over n are
// equal, so each pair is evaluated once.
double smoothness_term(const Signal& x, const SymmetricWeights& beta) {
  const auto half = beta.half();
  double acc = 0.0;
  for (std::size_t k = 1; k < half.size(); ++k) {
    if (half[k] == 0.0) continue;
    acc += 2.0 * half[k] * shifted_sq_distance(x, x, static_cast<long>(k));
  }
  return acc;
}

// sum_{n,k} alpha_k (y_{n+k} - c_n)^2 over the full -K..K range.
double fidelity_term(const Signal& y, const Signal& c, const SymmetricWeights& alpha) {
  const auto k_max = static_cast<long>(alpha.half_width());
  double acc = 0.0;
  for (long k = -k_max; k <= k_max; ++k) {
    const double a = alpha.at(k);
    if (a == 0.0) continue;
    acc += a * shifted_sq_distance(y, c, k);
  }
  return acc;
}

}  // namespace

double objective_cross(const Signal& x, const Signal& y, const Window& w) {
  check_same_length(x, y);
  return fidelity_term(y, x, w);
}

double objective_F(const Signal& x, const Signal& y, const Window& w) {
  check_same_length(x, y);
  return w.center() * shifted_sq_distance(y, x, 0) + smoothness_term(x, w);
}

double objective_G(const Signal& x, const Signal& y, const Theta& theta) {
  check_same_length(x, y);
  return fidelity_term(y, x, theta.alpha()) + smoothness_term(x, theta.beta());
}

double objective_H(const Signal& x, const Signal& y_bar, const SymmetricWeights& beta, double mass_a) {
  check_same_length(x, y_bar);
  return mass_a * shifted_sq_distance(y_bar, x, 0) + smoothness_term(x, beta);
}

Decomposition decompose(const Signal& y, const Theta& theta) {
  const Window p = theta.p();
  check_fits(p.half_width(), y.size());
  Signal y_bar = circular_convolve(y, p);
  const double h0 = fidelity_term(y, y_bar, theta.alpha());
  return Decomposition{std::move(y_bar), h0, theta.mass_a()};
}

double data_scatter(const Signal& y, const Window& p) {
  check_fits(p.half_width(), y.size());
  const Signal y_bar = circular_convolve(y, p);
  return fidelity_term(y, y_bar, p);
}

Signal moving_mean(const Signal& y, const Window& w) { return circular_convolve(y, w); }

Signal ar_smooth(const Signal& y, const Theta& theta) {
  const Window p = theta.p();
  check_fits(theta.half_width(), y.size());
  const ARKernel kernel = build_ar_kernel_theta(theta);
  return deconvolve(circular_convolve(y, p), kernel);
}

double stationarity_residual(const Signal& x, const Signal& y_bar, const Window& w) {
  check_same_length(x, y_bar);
  if (!(w.center() > 0.0)) {
    throw Error(Errc::DegenerateCenterWeight, "stationarity needs w_0 > 0");
  }
  const double w0 = w.center();
  const auto half = w.half();
  const auto n = static_cast<std::int64_t>(x.size());
  double worst = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    double neighbours = 0.0;
    for (std::size_t k = 1; k < half.size(); ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      // k and -k each contribute w_k (x_{n+k} + x_{n-k}).
      neighbours += 2.0 * half[k] * (x[i + kk] + x[i - kk]);
    }
    const double r = (2.0 - w0) * x[i] - w0 * y_bar[i] - neighbours;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace armm
