#include <gtest/gtest.h>

#include <cmath>

#include "armm/error.hpp"
#include "armm/smoother.hpp"
#include "armm/spectral.hpp"
#include "armm/verify.hpp"
#include "generators.hpp"

namespace armm {
namespace {

TEST(SolveDense, WorkedExample) {
  const Signal x = verify::solve_dense(make_signal({3, 0, 0}), ARKernel::from_half({5.0, -2.0}));
  EXPECT_NEAR(x.values()[0], 9.0 / 7.0, 1e-15);
  EXPECT_NEAR(x.values()[1], 6.0 / 7.0, 1e-15);
  EXPECT_NEAR(x.values()[2], 6.0 / 7.0, 1e-15);
  // (2 - w_0) x_0 = w_0 ybar_0 + 2 w_1 (x_1 + x_{-1}) with w = 1/3: 15/7 both sides.
  EXPECT_NEAR((5.0 / 3.0) * x.values()[0], 15.0 / 7.0, 1e-15);
  EXPECT_NEAR(1.0 + (2.0 / 3.0) * (x.values()[1] + x.values()[2]), 15.0 / 7.0, 1e-15);
}

TEST(SolveDense, ConstantAndGuard) {
  const Signal c = make_signal(std::vector<double>(9, 0.25));
  const Signal xc = verify::solve_dense(c, ARKernel::from_half({3.0, -1.0}));
  for (double v : xc.values()) EXPECT_NEAR(v, 0.25, 1e-15);
  try {
    verify::solve_dense(make_signal(std::vector<double>(600, 1.0)), ARKernel::from_half({5.0, -2.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLargeForOracle);
  }
}

TEST(Circulant, StructureAndEigenvalues) {
  testing::Rng rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 3, 40);
    const auto kernel = build_ar_kernel(testing::random_tapered_window(rng, testing::uniform_size(rng, 0, (n - 1) / 2)));
    const auto sys = verify::build_circulant(testing::gaussian_signal(rng, n), kernel);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(sys(i, j), sys(0, (j + n - i) % n));
        ASSERT_EQ(sys(i, j), sys(j, i));
      }
    }
    const auto eig = verify::circulant_eigenvalues(kernel, n);
    const auto v = spectrum_v(kernel, n);
    for (std::size_t m = 0; m < n; ++m) {
      EXPECT_NEAR(eig[m], v[m], 1e-10 * kernel.at(0));
      EXPECT_GE(eig[m], 1.0 - 1e-12 * kernel.at(0));
    }
  }
}

TEST(SolveDense, AgreesWithDeconvolve) {
  testing::Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 3, 64);
    const auto kernel = build_ar_kernel(testing::random_tapered_window(rng, testing::uniform_size(rng, 0, (n - 1) / 2)));
    const Signal y = testing::gaussian_signal(rng, n);
    EXPECT_LE(verify::max_relative_deviation(deconvolve(y, kernel).values(), verify::solve_dense(y, kernel).values()),
              1e-10);
  }
}

TEST(FiniteDiff, QuadraticSanity) {
  testing::Rng rng(52);
  const Signal x = testing::gaussian_signal(rng, 10);
  const auto grad = verify::finite_diff_gradient(
      [](const Signal& s) {
        double acc = 0.0;
        for (double v : s.values()) acc += v * v;
        return acc;
      },
      x);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_NEAR(grad.values()[i], 2.0 * x.values()[i], 2e-6);
}

TEST(FiniteDiff, GradientGrowsAwayFromMinimizer) {
  testing::Rng rng(53);
  const Signal y = testing::gaussian_signal(rng, 24);
  const Theta t = Theta::uniform(2, 1.0 / 3.0, 24);
  const Window w = weights_from_theta(t);
  const Decomposition d = decompose(y, t);
  const auto f = [&](const Signal& s) { return objective_F(s, d.y_bar, w); };
  const Signal x = ar_smooth(y, t);
  std::vector<double> moved(x.values().begin(), x.values().end());
  for (auto& v : moved) v += testing::uniform_real(rng, -0.5, 0.5);
  EXPECT_GT(verify::finite_diff_gradient(f, Signal(moved)).max_abs(), verify::finite_diff_gradient(f, x).max_abs());
}

TEST(NaiveObjectives, NonNegativeAndDecomposed) {
  testing::Rng rng(54);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 3, 20);
    const Theta t = testing::random_theta(rng, n);
    const auto r = verify::naive_objectives(testing::gaussian_signal(rng, n), testing::gaussian_signal(rng, n), t);
    EXPECT_GE(r.g, 0.0);
    EXPECT_GE(r.h0, 0.0);
    EXPECT_GE(r.h, 0.0);
    EXPECT_NEAR(r.g, r.h0 + r.h, 1e-10 * (1.0 + r.g));
  }
}

TEST(NaiveObjectives, LengthMismatch) {
  EXPECT_THROW(verify::naive_objectives(make_signal({1, 2, 3}), make_signal({1, 2, 3, 4}), Theta::uniform(1, 0.5, 3)),
               Error);
}

}  // namespace
}  // namespace armm
