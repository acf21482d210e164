#include "armm/theta.hpp"

#include <algorithm>
#include <cmath>

#include "armm/error.hpp"

namespace armm {

Theta::Theta(SymmetricWeights alpha, SymmetricWeights beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), mass_a_(alpha_.sum()), mass_b_(beta_.sum()) {
  if (beta_.center() != 0.0) {
    throw Error(Errc::InvalidWeights, "beta_0 must be zero");
  }
  if (!alpha_.is_tapered()) {
    throw Error(Errc::NotTapered, "alpha increases away from the center");
  }
  if (!beta_.is_tapered(1)) {
    throw Error(Errc::NotTapered, "beta increases away from offset 1");
  }
}

Theta Theta::from_shapes(const SymmetricWeights& p, const SymmetricWeights& q, double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw Error(Errc::InvalidWeights, "masses must be nonnegative");
  }
  return Theta(p.scaled(a), q.scaled(b));
}

Theta Theta::uniform(std::size_t m, double a, std::size_t n) {
  if (m == 0) {
    return from_shapes(make_uniform_window(0, n), SymmetricWeights::from_half({0.0}), a, 0.0);
  }
  return from_shapes(make_uniform_window(m, n), make_uniform_offcenter(m, n), a, 1.0 - a);
}

std::size_t Theta::half_width() const noexcept { return std::max(alpha_.half_width(), beta_.half_width()); }

bool Theta::on_simplex() const noexcept { return std::abs(mass_a_ + mass_b_ - 1.0) <= 1e-9; }

bool Theta::has_center_plateau() const noexcept {
  const auto h = alpha_.half();
  return h.size() < 2 || h[0] == h[1];
}

Window Theta::p() const {
  if (!(mass_a_ > 0.0)) {
    throw Error(Errc::ZeroDataMass, "alpha has zero mass");
  }
  return Window(alpha_.scaled(1.0 / mass_a_));
}

Theta Theta::scaled(double sigma) const { return Theta(alpha_.scaled(sigma), beta_.scaled(sigma)); }

namespace {

SymmetricWeights mix_weights(const SymmetricWeights& a, const SymmetricWeights& b, double lambda) {
  const std::size_t k_max = std::max(a.half_width(), b.half_width());
  std::vector<double> half(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto kk = static_cast<long>(k);
    half[k] = lambda * a.at(kk) + (1.0 - lambda) * b.at(kk);
  }
  return SymmetricWeights::from_half(std::move(half));
}

}  // namespace

Theta Theta::mix(const Theta& a, const Theta& b, double lambda) {
  return Theta(mix_weights(a.alpha_, b.alpha_, lambda), mix_weights(a.beta_, b.beta_, lambda));
}

Window weights_from_theta(const Theta& theta) {
  const double total = theta.mass_a() + theta.mass_b();
  if (!(total > 0.0)) {
    throw Error(Errc::AllZeroTheta, "alpha and beta are both zero");
  }
  const auto beta = theta.beta().half();
  std::vector<double> half(beta.begin(), beta.end());
  half[0] = theta.mass_a() / total;
  for (std::size_t k = 1; k < half.size(); ++k) half[k] /= total;
  return Window(SymmetricWeights::from_half(std::move(half)));
}

}  // namespace armm
