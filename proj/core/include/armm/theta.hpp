#ifndef ARMM_THETA_HPP
#define ARMM_THETA_HPP

#include "armm/window.hpp"

namespace armm {

/// Weights of the generalized objective
///
///   G(x, y) = sum_{n,k} alpha_k (y_{n+k} - x_n)^2 + sum_{n,k} beta_k (x_{n+k} - x_n)^2
///
/// alpha is the data-fidelity window and beta the smoothness window. beta_0
/// is structurally zero. Both are symmetric and tapered (beta over k != 0).
class Theta {
 public:
  /// Throws Errc::InvalidWeights if beta_0 != 0 and Errc::NotTapered if either
  /// window increases away from its center.
  Theta(SymmetricWeights alpha, SymmetricWeights beta);

  /// alpha = a * p, beta = b * q.
  static Theta from_shapes(const SymmetricWeights& p, const SymmetricWeights& q, double a, double b);

  /// The natural tied vertex: p uniform on -m..m, q uniform on k != 0, with
  /// masses a and 1 - a.
  static Theta uniform(std::size_t m, double a, std::size_t n);

  [[nodiscard]] const SymmetricWeights& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const SymmetricWeights& beta() const noexcept { return beta_; }
  [[nodiscard]] double mass_a() const noexcept { return mass_a_; }
  [[nodiscard]] double mass_b() const noexcept { return mass_b_; }
  [[nodiscard]] std::size_t half_width() const noexcept;

  /// True when A + B is within 1e-9 of one.
  [[nodiscard]] bool on_simplex() const noexcept;
  /// True when alpha_{-1} = alpha_0 = alpha_1 (or alpha has half-width 0).
  [[nodiscard]] bool has_center_plateau() const noexcept;

  /// p_k = alpha_k / A. Throws Errc::ZeroDataMass when A = 0.
  [[nodiscard]] Window p() const;

  [[nodiscard]] Theta scaled(double sigma) const;
  /// lambda * a + (1 - lambda) * b, entrywise.
  static Theta mix(const Theta& a, const Theta& b, double lambda);

  friend bool operator==(const Theta&, const Theta&) = default;

 private:
  SymmetricWeights alpha_;
  SymmetricWeights beta_;
  double mass_a_ = 0.0;
  double mass_b_ = 0.0;
};

/// Maps theta to the single window of the revised objective F:
/// w_0 = A / (A + B), w_k = beta_k / (A + B) for k != 0.
/// The result is tapered only when A >= max beta_k (e.g. A = 1/3 with a
/// uniform q); callers that need a TaperedWindow construct one from it.
Window weights_from_theta(const Theta& theta);

}  // namespace armm

#endif
