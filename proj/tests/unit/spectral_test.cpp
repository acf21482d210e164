#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "armm/error.hpp"
#include "armm/spectral.hpp"
#include "armm/verify.hpp"
#include "generators.hpp"

namespace armm {
namespace {

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

ARKernel kernel_521() { return ARKernel::from_half({5.0, -2.0}); }
ARKernel kernel_311() { return ARKernel::from_half({3.0, -1.0}); }

TEST(CircularConvolve, HandCheckedUniformThree) {
  const Signal y = make_signal({4, 0, 0, 0});
  const Signal x = circular_convolve(y, make_uniform_window(1, 4));
  const std::vector<double> expected{4.0 / 3.0, 4.0 / 3.0, 0.0, 4.0 / 3.0};
  EXPECT_LE(max_abs_diff(x.values(), expected), 1e-15);
}

TEST(CircularConvolve, DeltaIsIdentityAndConstantsAreFixed) {
  testing::Rng rng(1);
  const Signal y = testing::gaussian_signal(rng, 17);
  EXPECT_EQ(circular_convolve(y, make_uniform_window(0, 17)), y);
  const Signal c = make_signal(std::vector<double>(17, 2.5));
  const Signal out = circular_convolve(c, testing::random_tapered_window(rng, 6));
  for (double v : out.values()) EXPECT_NEAR(v, 2.5, 1e-14);
}

TEST(CircularConvolve, RejectsTooWide) {
  const Signal y = make_signal({1, 2, 3});
  EXPECT_THROW(circular_convolve(y, make_uniform_window(2, 5)), Error);
}

TEST(CircularConvolve, DirectAndFftPathsAgree) {
  testing::Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 3, 300);
    const std::size_t k = testing::uniform_size(rng, 0, (n - 1) / 2);
    const Signal y = testing::gaussian_signal(rng, n);
    std::vector<double> taps(2 * k + 1);
    for (auto& t : taps) t = testing::uniform_real(rng, -1.0, 1.0);
    const Signal a = circular_convolve_direct(y, taps);
    const Signal b = circular_convolve_fft(y, taps);
    EXPECT_LE(verify::max_relative_deviation(b.values(), a.values()), 1e-10) << "n=" << n << " k=" << k;
  }
}

TEST(CircularConvolve, NonSymmetricTapsFollowOffsetConvention) {
  // out_n = sum_k taps[K + k] y_{n+k}: a tap at +1 reads the next sample.
  const Signal y = make_signal({1, 2, 3, 4, 5});
  const std::vector<double> next{0.0, 0.0, 1.0};
  EXPECT_EQ(circular_convolve(y, next), make_signal({2, 3, 4, 5, 1}));
  EXPECT_LE(max_abs_diff(circular_convolve_fft(y, next).values(), std::vector<double>{2, 3, 4, 5, 1}), 1e-14);
}

TEST(ARKernel, FromWindowExamples) {
  EXPECT_EQ(build_ar_kernel(make_uniform_window(1, 3)).taps(), (std::vector<double>{-2, 5, -2}));
  const Window w(SymmetricWeights::from_half({0.5, 0.25}));
  EXPECT_EQ(build_ar_kernel(w).taps(), (std::vector<double>{-1, 3, -1}));
}

TEST(ARKernel, DegenerateCenterWeight) {
  const Window w(SymmetricWeights::from_half({0.0, 0.5}));
  try {
    build_ar_kernel(w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateCenterWeight);
  }
}

TEST(ARKernel, FromThetaMatchesMappedWindow) {
  const Theta t(SymmetricWeights::from_half({1.0 / 3.0}), SymmetricWeights::from_half({0.0, 1.0 / 3.0}));
  const auto via_theta = build_ar_kernel_theta(t).taps();
  const auto via_window = build_ar_kernel(weights_from_theta(t)).taps();
  ASSERT_EQ(via_theta.size(), 3u);
  EXPECT_LE(max_abs_diff(via_theta, via_window), 1e-14);
  EXPECT_LE(max_abs_diff(via_theta, std::vector<double>{-2, 5, -2}), 1e-14);

  testing::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Theta r = testing::random_theta(rng, 41);
    const auto a = build_ar_kernel_theta(r).taps();
    const auto b = build_ar_kernel(weights_from_theta(r)).taps();
    EXPECT_LE(max_abs_diff(a, b), 1e-14 * std::max(1.0, std::abs(a[a.size() / 2])));
  }
}

TEST(ARKernel, FromThetaEdgeCases) {
  const Theta identity(SymmetricWeights::from_half({1.0}), SymmetricWeights::from_half({0.0}));
  EXPECT_EQ(build_ar_kernel_theta(identity).taps(), (std::vector<double>{1.0}));
  const Theta no_data(SymmetricWeights::from_half({0.0}), SymmetricWeights::from_half({0.0, 0.5}));
  try {
    build_ar_kernel_theta(no_data);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroDataMass);
  }
}

TEST(ARKernel, MassIsOneForRandomWindows) {
  testing::Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = build_ar_kernel(testing::random_tapered_window(rng, testing::uniform_size(rng, 0, 20)));
    const auto taps = v.taps();
    const double total = std::accumulate(taps.begin(), taps.end(), 0.0);
    EXPECT_NEAR(total, 1.0, 1e-12 * std::max(1.0, v.at(0)));
    for (long k = 1; k <= static_cast<long>(v.half_width()); ++k) EXPECT_LE(v.at(k), 0.0);
  }
}

TEST(ARKernel, RejectsInvalidCoefficients) {
  EXPECT_THROW(ARKernel::from_half({5.0, 2.0}), Error);
  EXPECT_THROW(ARKernel::from_half({4.0, -2.0}), Error);
  EXPECT_THROW(ARKernel::from_half({-1.0}), Error);
}

TEST(SpectrumV, ThreePointExample) {
  const auto v = spectrum_v(kernel_521(), 3);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], 1.0);
  EXPECT_NEAR(v[1], 7.0, 1e-14);
  EXPECT_NEAR(v[2], 7.0, 1e-14);
}

TEST(SpectrumV, IdentityIsAllOnes) {
  for (double x : spectrum_v(ARKernel::from_half({1.0}), 9)) EXPECT_EQ(x, 1.0);
}

TEST(SpectrumV, ClosedFormMatchesDftAndEigenvalues) {
  testing::Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 3, 65);
    const auto kernel = build_ar_kernel(testing::random_tapered_window(rng, testing::uniform_size(rng, 0, (n - 1) / 2)));
    ASSERT_LE(kernel.half_width(), kClosedFormSpectrumMaxHalfWidth);
    const auto closed = spectrum_v(kernel, n);
    const auto dft = spectrum_v_dft(kernel, n);
    const auto eig = verify::circulant_eigenvalues(kernel, n);
    const double scale = std::max(1.0, kernel.at(0));
    EXPECT_LE(max_abs_diff(closed, dft), 1e-10 * scale);
    EXPECT_LE(max_abs_diff(closed, eig), 1e-10 * scale);
    EXPECT_EQ(closed[0], 1.0);
    for (double x : closed) EXPECT_GE(x, 1.0);
  }
}

TEST(SpectrumV, WideKernelsUseDftPath) {
  testing::Rng rng(10);
  const auto kernel = build_ar_kernel(testing::random_tapered_window(rng, 40));
  const auto v = spectrum_v(kernel, 101);
  EXPECT_LE(max_abs_diff(v, verify::circulant_eigenvalues(kernel, 101)), 1e-10 * kernel.at(0));
}

TEST(Deconvolve, WorkedExample) {
  const Signal x = deconvolve(make_signal({3, 0, 0}), kernel_521());
  const std::vector<double> expected{9.0 / 7.0, 6.0 / 7.0, 6.0 / 7.0};
  EXPECT_LE(max_abs_diff(x.values(), expected), 1e-14);
}

TEST(Deconvolve, ConstantsAndIdentity) {
  const Signal c = make_signal(std::vector<double>(12, -1.5));
  const Signal xc = deconvolve(c, kernel_311());
  for (double v : xc.values()) EXPECT_NEAR(v, -1.5, 1e-14);
  testing::Rng rng(12);
  const Signal y = testing::gaussian_signal(rng, 12);
  EXPECT_LE(verify::max_relative_deviation(deconvolve(y, ARKernel::from_half({1.0})).values(), y.values()), 1e-15);
}

TEST(Deconvolve, RoundTripProperty) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 3, 128);
    const auto kernel = build_ar_kernel(testing::random_tapered_window(rng, testing::uniform_size(rng, 0, (n - 1) / 2)));
    const Signal y = testing::gaussian_signal(rng, n);
    const Signal back = circular_convolve(deconvolve(y, kernel), kernel.taps());
    EXPECT_LE(verify::max_relative_deviation(back.values(), y.values()), 1e-9);
  }
}

TEST(Deconvolve, ShiftEquivariance) {
  testing::Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 3, 64);
    const auto kernel = build_ar_kernel(testing::random_tapered_window(rng, testing::uniform_size(rng, 0, (n - 1) / 2)));
    const Signal y = testing::gaussian_signal(rng, n);
    const auto s = static_cast<std::int64_t>(testing::uniform_size(rng, 0, n - 1));
    const Signal a = deconvolve(y.shifted(s), kernel);
    const Signal b = deconvolve(y, kernel).shifted(s);
    EXPECT_LE(verify::max_relative_deviation(a.values(), b.values()), 1e-12);
  }
}

TEST(Deconvolve, Linearity) {
  testing::Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 3, 64);
    const auto kernel = build_ar_kernel(testing::random_tapered_window(rng, testing::uniform_size(rng, 0, (n - 1) / 2)));
    const Signal y1 = testing::gaussian_signal(rng, n);
    const Signal y2 = testing::gaussian_signal(rng, n);
    const double a = testing::uniform_real(rng, -3, 3);
    const double b = testing::uniform_real(rng, -3, 3);
    std::vector<double> mix(n);
    for (std::size_t i = 0; i < n; ++i) mix[i] = a * y1.values()[i] + b * y2.values()[i];
    const Signal lhs = deconvolve(Signal(mix), kernel);
    const Signal x1 = deconvolve(y1, kernel);
    const Signal x2 = deconvolve(y2, kernel);
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = a * x1.values()[i] + b * x2.values()[i];
    EXPECT_LE(verify::max_relative_deviation(lhs.values(), rhs), 1e-10);
  }
}

TEST(Deconvolve, KernelMustFit) {
  const auto kernel = build_ar_kernel(make_uniform_window(2, 5));
  EXPECT_THROW(deconvolve(make_signal({1, 2, 3}), kernel), Error);
}

TEST(CharacteristicRoot, QuadraticRoots) {
  EXPECT_NEAR(characteristic_root(kernel_521()), 0.5, 1e-12);
  EXPECT_NEAR(characteristic_root(kernel_311()), (3.0 - std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_LE(std::abs(characteristic_polynomial(kernel_521(), characteristic_root(kernel_521()))), 1e-12);
  EXPECT_LE(std::abs(characteristic_polynomial(kernel_311(), characteristic_root(kernel_311()))), 1e-12);
}

TEST(CharacteristicRoot, IdentityHasNoRoot) {
  try {
    characteristic_root(ARKernel::from_half({1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoSmoothingTerm);
  }
}

TEST(CharacteristicRoot, LambdaIncreasingOnUnitInterval) {
  testing::Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const auto kernel = build_ar_kernel(testing::random_tapered_window(rng, testing::uniform_size(rng, 1, 6)));
    double r1 = testing::uniform_real(rng, 0.01, 0.99);
    double r2 = testing::uniform_real(rng, 0.01, 0.99);
    if (r1 > r2) std::swap(r1, r2);
    if (r1 == r2) continue;
    EXPECT_LT(characteristic_polynomial(kernel, r1), characteristic_polynomial(kernel, r2));
    EXPECT_NEAR(characteristic_polynomial(kernel, 1.0), 1.0, 1e-12 * kernel.at(0));
    const double root = characteristic_root(kernel);
    EXPECT_GT(root, 0.0);
    EXPECT_LT(root, 1.0);
  }
}

TEST(EffectiveWindow, IdentityKernelGivesDelta) {
  const auto report = effective_window(ARKernel::from_half({1.0}), 16);
  EXPECT_EQ(report.u[0], 1.0);
  for (std::size_t i = 1; i < 16; ++i) EXPECT_EQ(report.u[i], 0.0);
  EXPECT_FALSE(report.r_star.has_value());
}

TEST(EffectiveWindow, TailRatiosFollowCharacteristicRoot) {
  struct Case {
    ARKernel kernel;
    double ratio;
  };
  const Case cases[] = {{kernel_521(), 0.5}, {kernel_311(), (3.0 - std::sqrt(5.0)) / 2.0}};
  for (const auto& c : cases) {
    const std::size_t n = 256;
    const auto report = effective_window(c.kernel, n);
    ASSERT_TRUE(report.r_star.has_value());
    EXPECT_NEAR(*report.r_star, c.ratio, 1e-10);
    for (std::size_t k = 5; k <= n / 4; ++k) {
      EXPECT_NEAR(report.u[k + 1] / report.u[k], c.ratio, 1e-3) << "k=" << k;
    }
  }
}

TEST(EffectiveWindow, MatchesInverseDftAndInvertsKernel) {
  testing::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 3, 200);
    const auto kernel = build_ar_kernel(testing::random_tapered_window(rng, testing::uniform_size(rng, 0, std::min<std::size_t>(8, (n - 1) / 2))));
    const auto report = effective_window(kernel, n);
    const auto dft = effective_window_dft(kernel, n);
    EXPECT_LE(max_abs_diff(report.u, dft), 1e-12);
    EXPECT_NEAR(std::accumulate(report.u.begin(), report.u.end(), 0.0), 1.0, 1e-9);

    const Signal conv = circular_convolve(Signal(report.u), kernel.taps());
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(conv.values()[i], i == 0 ? 1.0 : 0.0, 1e-9);

    // Nonnegative and unimodal about offset 0.
    for (double x : report.u) EXPECT_GE(x, 0.0);
    for (std::size_t k = 1; k <= n / 2; ++k) {
      EXPECT_LE(report.u[k], report.u[k - 1] + 1e-12);
      EXPECT_LE(report.u[n - k], report.u[(n - k + 1) % n] + 1e-12);
    }
    EXPECT_GE(report.min_v(), 1.0);
  }
}

}  // namespace
}  // namespace armm
