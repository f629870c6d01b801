#include "ffskit/funcs.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "ffskit/ffs.hpp"
#include "test_util.hpp"

using namespace ffskit;

namespace {

/// Test-side oracle: the defining cosine sum in long double.
double dirichlet_direct_sum(double t, const DirichletSpec& spec) {
  const long double u = static_cast<long double>(t - spec.center) / spec.period;
  long double acc = 1.0L;
  for (std::size_t k = 1; k <= (spec.bandwidth - 1) / 2; ++k) {
    acc += 2.0L * std::cos(2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) * u);
  }
  return static_cast<double>(acc);
}

}  // namespace

TEST(Dirichlet, PeakValueAtCenter) {
  const DirichletSpec spec{1.0, 0.25, 7};
  const std::vector<double> t = {0.25};
  EXPECT_NEAR(dirichlet(t, spec)[0].real(), 7.0, 1e-13);
  EXPECT_NEAR(dirichlet(t, spec)[0].imag(), 0.0, 1e-13);
}

TEST(Dirichlet, FirstZeroOfTheKernel) {
  const DirichletSpec spec{1.0, 0.0, 5};
  const std::vector<double> t = {1.0 / 5.0};
  EXPECT_NEAR(std::abs(dirichlet(t, spec)[0]), 0.0, 1e-12);
}

TEST(Dirichlet, MatchesDirectSummation) {
  std::mt19937_64 rng(601);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const DirichletSpec spec{1.5, -0.3, 11};
  std::vector<double> t(64);
  for (double& v : t) v = dist(rng);
  const std::vector<cdouble> got = dirichlet(t, spec);
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_NEAR(got[i].real(), dirichlet_direct_sum(t[i], spec), 1e-11) << "t=" << t[i];
  }
}

TEST(Dirichlet, StableNearTheRemovableSingularity) {
  const DirichletSpec spec{1.0, 0.0, 9};
  // points straddling u = 0 and u = T, inside and outside the series fallback
  const std::vector<double> t = {0.0,    1e-12,  -1e-10, 1e-9,  -1e-8,
                                 1e-8,   1.0,    1.0 + 1e-9, 1.0 - 1e-8, 2.0};
  const std::vector<cdouble> got = dirichlet(t, spec);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double want = dirichlet_direct_sum(t[i], spec);
    // near the zeros of sin the closed form is limited by double argument
    // reduction, so the bound is looser than elsewhere
    EXPECT_NEAR(got[i].real(), want, 1e-6 * std::abs(want) + 1e-9) << "t=" << t[i];
  }
}

TEST(Dirichlet2d, CenterValueAndSeparability) {
  const DirichletSpec sx{1.0, 0.1, 5};
  const DirichletSpec sy{2.0, -0.4, 7};
  const std::vector<double> x = {0.1, 0.3};
  const std::vector<double> y = {-0.4, 0.2, 0.9};
  const Tensor grid = dirichlet_2d(x, y, sx, sy);
  EXPECT_NEAR(grid[0].real(), 35.0, 1e-11);  // value at the center point

  // every row is a scalar multiple of the 1-D y-profile
  const std::vector<cdouble> profile = dirichlet(y, sy);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const cdouble scale = dirichlet(std::vector<double>{x[i]}, sx)[0];
    for (std::size_t j = 0; j < y.size(); ++j) {
      EXPECT_NEAR(std::abs(grid[i * 3 + j] - scale * profile[j]), 0.0, 1e-12);
    }
  }
}

TEST(Dirichlet2d, MatchesOuterProductOnRandomGrid) {
  std::mt19937_64 rng(602);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const DirichletSpec sx{1.0, 0.0, 9};
  const DirichletSpec sy{1.0, 0.5, 3};
  std::vector<double> x(5), y(4);
  for (double& v : x) v = dist(rng);
  for (double& v : y) v = dist(rng);
  const Tensor grid = dirichlet_2d(x, y, sx, sy);
  const std::vector<cdouble> dx = dirichlet(x, sx);
  const std::vector<cdouble> dy = dirichlet(y, sy);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      EXPECT_NEAR(std::abs(grid[i * 4 + j] - dx[i] * dy[j]), 0.0, 1e-12);
    }
  }
}

TEST(ApplyTaper, ZeroFractionIsIdentity) {
  std::mt19937_64 rng(603);
  const std::vector<cdouble> x = testutil::random_coeffs(rng, 17);
  EXPECT_EQ(apply_taper(x, 0.0), x);  // bitwise
}

TEST(ApplyTaper, FullCosineKeepsOddMidpoint) {
  std::mt19937_64 rng(604);
  const std::vector<cdouble> x = testutil::random_coeffs(rng, 21);
  const std::vector<cdouble> tapered = apply_taper(x, 1.0);
  EXPECT_EQ(tapered[10], x[10]);  // window is 1 at the center
  EXPECT_EQ(tapered.front(), cdouble(0.0));
  EXPECT_EQ(tapered.back(), cdouble(0.0));
}

TEST(ApplyTaper, HalfFractionPlateauOnHundredSamples) {
  const std::vector<cdouble> x(100, cdouble(1.0));
  const std::vector<cdouble> tapered = apply_taper(x, 0.5);
  EXPECT_EQ(tapered[0], cdouble(0.0));
  EXPECT_EQ(tapered[99], cdouble(0.0));
  for (std::size_t n = 25; n <= 74; ++n) {
    EXPECT_EQ(tapered[n], cdouble(1.0)) << "plateau index " << n;
  }
  // taper region follows the cosine ramp; value frozen from the definition
  const double want_n10 = 0.5 * (1.0 + std::cos(std::numbers::pi * (2.0 * (10.0 / 99.0) / 0.5 - 1.0)));
  EXPECT_NEAR(tapered[10].real(), want_n10, 1e-15);
  EXPECT_LT(tapered[10].real(), 1.0);
  EXPECT_GT(tapered[10].real(), 0.0);
}

TEST(ApplyTaper, RejectsFractionOutsideUnitInterval) {
  const std::vector<cdouble> x(4, cdouble(1.0));
  EXPECT_THROW(apply_taper(x, -0.1), std::invalid_argument);
  EXPECT_THROW(apply_taper(x, 1.1), std::invalid_argument);
  EXPECT_THROW(apply_taper(x, std::nan("")), std::invalid_argument);
}

TEST(FuncsCrossModule, FfsOfSampledDirichletIsAllOnes) {
  // Zero-centered kernel: its absolute-phase coefficients are exactly one.
  // (With a nonzero center the same analysis returns the phase ramp
  // exp(-j 2 pi k T_c / T), per synthesis from the defining integral.)
  const DimSpec dim{2.0, 0.0, 9, 12};
  PeriodicGrid grid({dim});
  const SamplePoints pts = sample_points(dim);
  const std::vector<cdouble> samples = dirichlet(pts.timestamps, {2.0, 0.0, 9});
  const FsCoefficients coeffs = ffs({Tensor::line(samples), SampleOrder::ffs}, grid);
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_NEAR(std::abs(coeffs.coeffs()[i] - cdouble(1.0)), 0.0, 1e-11);
  }
}

TEST(FuncsCrossModule, ShiftedKernelCoefficientsCarryThePhaseRamp) {
  const DimSpec dim{2.0, 0.5, 9, 12};
  PeriodicGrid grid({dim});
  const SamplePoints pts = sample_points(dim);
  const std::vector<cdouble> samples = dirichlet(pts.timestamps, {2.0, 0.5, 9});
  const FsCoefficients coeffs = ffs({Tensor::line(samples), SampleOrder::ffs}, grid);
  for (long long k = -4; k <= 4; ++k) {
    const cdouble want =
        std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) * 0.5 / 2.0);
    EXPECT_NEAR(std::abs(coeffs.coeffs()[static_cast<std::size_t>(k + 4)] - want), 0.0, 1e-11);
  }
}

TEST(FuncsCrossModule, TaperSuppressesDiscontinuityLeakage) {
  // Non-harmonic sinusoid truncated to one period: the jump at the boundary
  // leaks into every coefficient. Tapering must reduce the magnitude of every
  // coefficient outside the kernel's main lobe.
  const DimSpec dim{1.0, 0.0, 101, 101};
  PeriodicGrid grid({dim});
  const double freq = 10.5;
  const double phase = 0.7;  // breaks odd symmetry so no coefficient is exactly zero
  const std::vector<double> natural = testutil::natural_timestamps(dim);
  std::vector<cdouble> samples(natural.size());
  for (std::size_t i = 0; i < natural.size(); ++i) {
    samples[i] = std::sin(2.0 * std::numbers::pi * freq * natural[i] + phase);
  }
  const std::vector<cdouble> tapered = apply_taper(samples, 0.25);

  const auto analyze = [&](const std::vector<cdouble>& nat) {
    return ffs(to_ffs_order({Tensor::line(nat), SampleOrder::natural}, grid), grid)
        .coeffs()
        .values();
  };
  const std::vector<cdouble> plain_coeffs = analyze(samples);
  const std::vector<cdouble> taper_coeffs = analyze(tapered);

  std::size_t compared = 0;
  for (long long k = -50; k <= 50; ++k) {
    if (std::abs(std::abs(static_cast<double>(k)) - freq) <= 5.0) continue;  // main lobes
    const std::size_t idx = static_cast<std::size_t>(k + 50);
    EXPECT_LT(std::abs(taper_coeffs[idx]), std::abs(plain_coeffs[idx])) << "k=" << k;
    ++compared;
  }
  EXPECT_GT(compared, 60u);
}
