#include "ffskit/czt.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ffskit/reference.hpp"
#include "ffskit/spectral.hpp"
#include "test_util.hpp"

using namespace ffskit;

namespace {

CztParams dft_params(std::size_t n) {
  return {cdouble(1.0), std::polar(1.0, -2.0 * std::numbers::pi / static_cast<double>(n)), n};
}

}  // namespace

TEST(Czt, ReducesToDftOnUnitCircle) {
  std::mt19937_64 rng(301);
  for (const std::size_t n : {1u, 4u, 8u, 13u}) {
    const std::vector<cdouble> x = testutil::random_coeffs(rng, n);
    EXPECT_LE(testutil::rel_error(czt(x, dft_params(n)), dft(x)), 1e-12) << "n=" << n;
  }
}

TEST(Czt, SingleInputBroadcastsToOutput) {
  const cdouble c{2.5, -1.0};
  const std::vector<cdouble> out = czt(std::vector<cdouble>{c}, {cdouble(1.0), cdouble{0.5, 0.5}, 7});
  ASSERT_EQ(out.size(), 7u);
  // the spiral |W| != 1 chirps reach ~2^9 before cancelling, so allow rounding
  for (const cdouble& v : out) EXPECT_NEAR(std::abs(v - c), 0.0, 1e-12);
}

TEST(Czt, SmallCaseMatchesDirectSummation) {
  std::mt19937_64 rng(302);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const std::vector<cdouble> x = testutil::random_coeffs(rng, 5);
  const CztParams p{std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)), 3};
  EXPECT_LE(testutil::rel_error(czt(x, p), reference::direct_czt(x, p)), 1e-11);
}

TEST(Czt, SweepAgainstDirectSummation) {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (const std::size_t n : {1u, 2u, 5u, 17u, 31u, 32u}) {
    for (const std::size_t m : {1u, 3u, 16u, 29u}) {
      const std::vector<cdouble> x = testutil::random_coeffs(rng, n);
      const CztParams p{std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)), m};
      EXPECT_LE(testutil::rel_error(czt(x, p), reference::direct_czt(x, p)), 1e-10)
          << "n=" << n << " m=" << m;
    }
  }
}

TEST(Czt, SpiralParametersOffTheUnitCircle) {
  std::mt19937_64 rng(304);
  const std::vector<cdouble> x = testutil::random_coeffs(rng, 9);
  const CztParams p{std::polar(1.1, 0.4), std::polar(0.97, -1.3), 11};
  EXPECT_LE(testutil::rel_error(czt(x, p), reference::direct_czt(x, p)), 1e-10);
}

TEST(Czt, LinearInInput) {
  std::mt19937_64 rng(305);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const CztParams p{std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)), 12};
  const std::vector<cdouble> a = testutil::random_coeffs(rng, 10);
  const std::vector<cdouble> b = testutil::random_coeffs(rng, 10);
  const cdouble alpha{0.5, 1.5}, beta{-1.0, 0.25};
  std::vector<cdouble> combo(10);
  for (std::size_t i = 0; i < 10; ++i) combo[i] = alpha * a[i] + beta * b[i];
  const std::vector<cdouble> fa = czt(a, p), fb = czt(b, p), fc = czt(combo, p);
  std::vector<cdouble> rhs(12);
  for (std::size_t i = 0; i < 12; ++i) rhs[i] = alpha * fa[i] + beta * fb[i];
  EXPECT_LE(testutil::rel_error(fc, rhs), 1e-13);
}

TEST(Cztn, PerAxisDftEqualsTwoDimensionalDft) {
  std::mt19937_64 rng(306);
  const Tensor t = testutil::random_tensor(rng, {4, 6});
  const CztParams params[2] = {dft_params(4), dft_params(6)};
  const Tensor got = cztn(t, params);

  // reference: 1-D direct DFT along columns then rows
  Tensor want = t;
  want = transform_axis(want, 0, 4, [](std::span<const cdouble> s, std::span<cdouble> d) {
    const std::vector<cdouble> r = reference::direct_dft(s);
    std::copy(r.begin(), r.end(), d.begin());
  });
  want = transform_axis(want, 1, 6, [](std::span<const cdouble> s, std::span<cdouble> d) {
    const std::vector<cdouble> r = reference::direct_dft(s);
    std::copy(r.begin(), r.end(), d.begin());
  });
  EXPECT_LE(testutil::rel_error(got.values(), want.values()), 1e-12);
}

TEST(Cztn, SeparableTensorGivesOuterProduct)
{
  std::mt19937_64 rng(307);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const std::vector<cdouble> ax = testutil::random_coeffs(rng, 3);
  const std::vector<cdouble> ay = testutil::random_coeffs(rng, 5);
  Tensor t({3, 5});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 5; ++j) t[i * 5 + j] = ax[i] * ay[j];
  }
  const CztParams px{std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)), 4};
  const CztParams py{std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)), 6};
  const CztParams params[2] = {px, py};
  const Tensor got = cztn(t, params);
  const std::vector<cdouble> cx = czt(ax, px), cy = czt(ay, py);
  std::vector<cdouble> want(4 * 6);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 6; ++j) want[i * 6 + j] = cx[i] * cy[j];
  }
  EXPECT_LE(testutil::rel_error(got.values(), want), 1e-12);
}

TEST(Cztn, AxisOrderDoesNotMatter) {
  std::mt19937_64 rng(308);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const Tensor t = testutil::random_tensor(rng, {3, 4});
  const CztParams px{std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)), 5};
  const CztParams py{std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)), 7};
  const CztParams fwd[2] = {px, py};
  const CztParams swapped[2] = {py, px};
  const Tensor direct = cztn(t, fwd);
  const Tensor transposed = cztn(testutil::transpose_2d(t), swapped);
  EXPECT_LE(
      testutil::rel_error(direct.values(), testutil::transpose_2d(transposed).values()), 1e-12);
}

TEST(Czt, RuntimeScalesBetterThanQuadratic) {
  // Doubling N + M at a smooth transform length must not quadruple runtime.
  std::mt19937_64 rng(309);
  const auto measure = [&](std::size_t n) {
    const std::vector<cdouble> x = testutil::random_coeffs(rng, n);
    const CztParams p{cdouble(1.0), std::polar(1.0, 0.37), n};
    czt(x, p);  // warm-up / plan construction
    double best = 1e100;
    for (int rep = 0; rep < 5; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      volatile double guard = czt(x, p)[0].real();
      (void)guard;
      const auto t1 = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
  };
  const double small = measure(4096);
  const double large = measure(8192);
  EXPECT_LE(large / small, 3.0);  // O(L log L) predicts ~2.2x when N + M doubles
}

TEST(CztErrors, RejectsBadParameters) {
  const std::vector<cdouble> x = {{1, 0}, {2, 0}};
  EXPECT_THROW(czt(x, {cdouble(0.0), cdouble(1.0), 4}), std::invalid_argument);
  EXPECT_THROW(czt(x, {cdouble(1.0), cdouble(0.0), 4}), std::invalid_argument);
  EXPECT_THROW(czt(x, {cdouble(1.0), cdouble(1.0), 0}), std::invalid_argument);
  EXPECT_THROW(czt(std::vector<cdouble>{}, {cdouble(1.0), cdouble(1.0), 4}),
               std::invalid_argument);
  const Tensor t({2, 2});
  const CztParams one[1] = {{cdouble(1.0), cdouble(1.0), 2}};
  EXPECT_THROW(cztn(t, one), std::invalid_argument);  // rank mismatch
}
