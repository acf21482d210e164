#ifndef ARMM_SMOOTHER_HPP
#define ARMM_SMOOTHER_HPP

#include "armm/signal.hpp"
#include "armm/spectral.hpp"
#include "armm/theta.hpp"
#include "armm/window.hpp"

namespace armm {

// All objectives are raw sums over n (no 1/N factor), so values grow with
// the signal length.

/// sum_n sum_k w_k (y_{n+k} - x_n)^2. The moving mean of y minimizes it.
double objective_cross(const Signal& x, const Signal& y, const Window& w);

/// sum_n [ w_0 (y_n - x_n)^2 + sum_{k != 0} w_k (x_{n+k} - x_n)^2 ].
double objective_F(const Signal& x, const Signal& y, const Window& w);

/// sum_{n,k} alpha_k (y_{n+k} - x_n)^2 + sum_{n,k} beta_k (x_{n+k} - x_n)^2.
double objective_G(const Signal& x, const Signal& y, const Theta& theta);

/// sum_n A (ybar_n - x_n)^2 + sum_{n,k} beta_k (x_{n+k} - x_n)^2.
double objective_H(const Signal& x, const Signal& y_bar, const SymmetricWeights& beta, double mass_a);

/// Split of G into a data-scatter constant and an x-dependent part:
/// G(x, y, theta) = h0 + H(x, y_bar, beta, A) for every x.
struct Decomposition {
  Signal y_bar;  // local weighted mean, y convolved with alpha / A
  double h0;     // sum_{n,k} alpha_k (y_{n+k} - ybar_n)^2
  double mass_a;
};

Decomposition decompose(const Signal& y, const Theta& theta);

/// H0 for a probability window p (mass 1): sum_{n,k} p_k (y_{n+k} - ybar_n)^2.
double data_scatter(const Signal& y, const Window& p);

/// Weighted moving mean x_n = sum_k w_k y_{n+k}.
Signal moving_mean(const Signal& y, const Window& w);

/// Minimizer of G over x: x = IDFT(DFT(y) * DFT(p) / DFT(v)).
Signal ar_smooth(const Signal& y, const Theta& theta);

/// max_n |(2 - w_0) x_n - w_0 ybar_n - sum_{k != 0} w_k (x_{n+k} + x_{n-k})|.
/// Zero exactly at the minimizer of F(., ybar, w).
double stationarity_residual(const Signal& x, const Signal& y_bar, const Window& w);

}  // namespace armm

#endif
