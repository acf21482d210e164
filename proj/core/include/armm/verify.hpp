#ifndef ARMM_VERIFY_HPP
#define ARMM_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "armm/signal.hpp"
#include "armm/spectral.hpp"
#include "armm/theta.hpp"

/// Brute-force reference implementations. Nothing here touches the FFT or
/// the smoother's summation code; it exists to check them.
namespace armm::verify {

inline constexpr std::size_t kMaxOracleSize = 512;

/// Dense N x N matrix whose row i is the kernel v placed cyclically around
/// column i, so that (C x)_i = sum_k v_k x_{i+k}.
struct CirculantSystem {
  std::size_t n = 0;
  std::vector<double> matrix;  // row-major
  std::vector<double> rhs;

  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return matrix[i * n + j]; }
};

CirculantSystem build_circulant(const Signal& y_bar, const ARKernel& kernel);

/// Gaussian elimination with partial pivoting on the circulant system.
/// Errc::TooLargeForOracle above 512 samples.
Signal solve_dense(const Signal& y_bar, const ARKernel& kernel);

/// Naive O(N^2) real DFT of the first circulant row, i.e. the matrix
/// eigenvalues.
std::vector<double> circulant_eigenvalues(const ARKernel& kernel, std::size_t n);

using Objective = std::function<double(const Signal&)>;

/// Central differences with per-coordinate step h * max(1, |x_i|).
Signal finite_diff_gradient(const Objective& f, const Signal& x, double h = 1e-6);

struct NaiveObjectives {
  double g;
  double h0;
  double h;
};

/// Direct double loops over n and every k in -K..K with modular indexing.
NaiveObjectives naive_objectives(const Signal& x, const Signal& y, const Theta& theta);

/// Naive F with the same loop structure.
double naive_objective_F(const Signal& x, const Signal& y, std::span<const double> w_taps);

/// max_i |a_i - b_i| / max_i |b_i| (absolute when b is all zeros).
double max_relative_deviation(std::span<const double> a, std::span<const double> b);

}  // namespace armm::verify

#endif
