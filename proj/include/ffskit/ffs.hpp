#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffskit/grid.hpp"
#include "ffskit/spectral.hpp"
#include "ffskit/tensor.hpp"

namespace ffskit {

/// Fourier series coefficients of a periodic bandlimited signal, tied to the
/// grid that produced them.
///
/// Per axis the tensor has length N_s: the leading N_FS entries hold
/// X_{-N} ... X_N in ascending index order and the trailing Q entries are the
/// zero padding (numerically ~0 after analysis of a bandlimited input).
/// Synthesis treats the trailing entries as zero regardless of content, so
/// analysis and synthesis are exact inverses.
class FsCoefficients {
 public:
  FsCoefficients(PeriodicGrid grid, Tensor coeffs)
      : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
    if (coeffs_.shape() != grid_.sample_shape()) {
      throw std::invalid_argument("FsCoefficients: tensor shape must be N_s per axis");
    }
  }

  /// Pads a per-axis length-N_FS coefficient tensor with zeros up to N_s.
  static FsCoefficients from_trimmed(PeriodicGrid grid, const Tensor& trimmed) {
    if (trimmed.rank() != grid.rank()) {
      throw std::invalid_argument("FsCoefficients: rank mismatch");
    }
    Tensor padded = trimmed;
    for (std::size_t axis = 0; axis < grid.rank(); ++axis) {
      const DimSpec& dim = grid.dims[axis];
      if (trimmed.extent(axis) != dim.bandwidth) {
        throw std::invalid_argument("FsCoefficients: trimmed extent must be N_FS per axis");
      }
      padded = transform_axis(padded, axis, dim.sample_count,
                              [&](std::span<const cdouble> src, std::span<cdouble> dst) {
                                for (std::size_t i = 0; i < dim.bandwidth; ++i) dst[i] = src[i];
                                for (std::size_t i = dim.bandwidth; i < dim.sample_count; ++i) {
                                  dst[i] = 0.0;
                                }
                              });
    }
    return FsCoefficients(std::move(grid), std::move(padded));
  }

  const PeriodicGrid& grid() const { return grid_; }
  const Tensor& coeffs() const { return coeffs_; }
  Tensor& coeffs() { return coeffs_; }

  /// Per-axis leading N_FS block, i.e. the coefficients without the padding.
  Tensor trimmed() const {
    Tensor t = coeffs_;
    for (std::size_t axis = 0; axis < grid_.rank(); ++axis) {
      const std::size_t n_fs = grid_.dims[axis].bandwidth;
      t = transform_axis(t, axis, n_fs, [&](std::span<const cdouble> src, std::span<cdouble> dst) {
        for (std::size_t i = 0; i < n_fs; ++i) dst[i] = src[i];
      });
    }
    return t;
  }

 private:
  PeriodicGrid grid_;
  Tensor coeffs_;
};

namespace detail {

/// Unit phasor exp(j 2 pi (num_a * num_b mod den) / den) with exact integer
/// reduction of the exponent.
inline cdouble root_of_unity(long long num_a, long long num_b, long long den) {
  const long long a = ((num_a % den) + den) % den;
  const long long b = ((num_b % den) + den) % den;
  const long long r = (a * b) % den;
  return std::polar(1.0, two_pi * static_cast<double>(r) / static_cast<double>(den));
}

/// Unit phasor exp(j 2 pi ratio k) with the phase folded to one turn.
inline cdouble harmonic_phasor(double ratio, long long k) {
  const double turns = std::remainder(ratio * static_cast<double>(k), 1.0);
  return std::polar(1.0, two_pi * turns);
}

/// Modulation vectors that turn a plain (i)FFT into Fourier series
/// analysis/synthesis on one axis.
///
/// With B_1 the per-coefficient center phasor, B_2 = exp(-j 2 pi / N_s),
/// E_1 = [-N ... N, 0_Q] and E_2 the split time indices:
///   analysis   X = (1/N_s) DFT(x . B_2^{-N E_2}) . B_1^{-E_1}
///   synthesis  x = N_s IDFT(X . B_1^{E_1}) . B_2^{N E_2}
/// For odd N_s, B_1 = exp(j 2 pi T_c / T); for even N_s the half-sample
/// timestamp offset shifts it to exp(j (2 pi / T)(T_c + T / (2 N_s))).
struct FfsAxisPlan {
  std::size_t n_s = 0;
  std::vector<cdouble> pre_analysis;    // B_2^{-N E_2}
  std::vector<cdouble> post_analysis;   // B_1^{-E_1} / N_s
  std::vector<cdouble> pre_synthesis;   // B_1^{E_1}, zero on the padding
  std::vector<cdouble> post_synthesis;  // B_2^{N E_2}

  explicit FfsAxisPlan(const DimSpec& dim) : n_s(dim.sample_count) {
    const long long n_half = static_cast<long long>((dim.bandwidth - 1) / 2);
    const long long n_s_ll = static_cast<long long>(n_s);
    const bool odd = n_s % 2 == 1;
    const double center_ratio =
        dim.center / dim.period + (odd ? 0.0 : 1.0 / (2.0 * static_cast<double>(n_s)));
    const double inv_n_s = 1.0 / static_cast<double>(n_s);

    pre_analysis.resize(n_s);
    post_analysis.resize(n_s);
    pre_synthesis.resize(n_s);
    post_synthesis.resize(n_s);
    for (std::size_t pos = 0; pos < n_s; ++pos) {
      const long long e2 = ffs_time_index(pos, n_s);
      // B_2^{-N e2} = exp(+j 2 pi N e2 / N_s)
      const cdouble b2 = root_of_unity(n_half, e2, n_s_ll);
      pre_analysis[pos] = b2;
      post_synthesis[pos] = std::conj(b2);
      if (pos < dim.bandwidth) {
        const long long k = static_cast<long long>(pos) - n_half;
        const cdouble b1 = harmonic_phasor(center_ratio, k);
        pre_synthesis[pos] = b1;
        post_analysis[pos] = std::conj(b1) * inv_n_s;
      } else {
        pre_synthesis[pos] = 0.0;
        post_analysis[pos] = inv_n_s;
      }
    }
  }

  void analyze(std::span<const cdouble> src, std::span<cdouble> dst) const {
    std::vector<cdouble> tmp(n_s);
    for (std::size_t i = 0; i < n_s; ++i) tmp[i] = src[i] * pre_analysis[i];
    fft_forward(tmp, dst);
    for (std::size_t i = 0; i < n_s; ++i) dst[i] *= post_analysis[i];
  }

  void synthesize(std::span<const cdouble> src, std::span<cdouble> dst) const {
    std::vector<cdouble> tmp(n_s);
    for (std::size_t i = 0; i < n_s; ++i) tmp[i] = src[i] * pre_synthesis[i];
    fft_backward_raw(tmp, dst);  // N_s * IDFT
    for (std::size_t i = 0; i < n_s; ++i) dst[i] *= post_synthesis[i];
  }
};

inline void check_ffs_input(const SampleTensor& x, const PeriodicGrid& grid, const char* what) {
  if (x.order != SampleOrder::ffs) {
    throw std::invalid_argument(std::string(what) + ": samples must be in ffs order");
  }
  check_grid_shape(x.values, grid, what);
}

}  // namespace detail

/// Fourier series analysis of an N-D sample tensor in ffs order: one modulated
/// FFT pass per axis. Exact (up to rounding) for signals bandlimited to N_FS
/// per axis and sampled at the sample_points timestamps.
inline FsCoefficients ffsn(const SampleTensor& x, const PeriodicGrid& grid) {
  detail::check_ffs_input(x, grid, "ffsn");
  Tensor t = x.values;
  for (std::size_t axis = 0; axis < grid.rank(); ++axis) {
    const detail::FfsAxisPlan plan(grid.dims[axis]);
    t = transform_axis(t, axis, plan.n_s,
                       [&](std::span<const cdouble> s, std::span<cdouble> d) { plan.analyze(s, d); });
  }
  return FsCoefficients(grid, std::move(t));
}

/// Fourier series synthesis back to samples in ffs order; inverse of ffsn.
inline SampleTensor iffsn(const FsCoefficients& coeffs) {
  Tensor t = coeffs.coeffs();
  const PeriodicGrid& grid = coeffs.grid();
  for (std::size_t axis = 0; axis < grid.rank(); ++axis) {
    const detail::FfsAxisPlan plan(grid.dims[axis]);
    t = transform_axis(t, axis, plan.n_s, [&](std::span<const cdouble> s, std::span<cdouble> d) {
      plan.synthesize(s, d);
    });
  }
  return {std::move(t), SampleOrder::ffs};
}

/// 1-D analysis; the grid must have a single dimension.
inline FsCoefficients ffs(const SampleTensor& x, const PeriodicGrid& grid) {
  if (grid.rank() != 1) throw std::invalid_argument("ffs: grid must be 1-D (use ffsn)");
  return ffsn(x, grid);
}

/// 1-D synthesis; the coefficient grid must have a single dimension.
inline SampleTensor iffs(const FsCoefficients& coeffs) {
  if (coeffs.grid().rank() != 1) throw std::invalid_argument("iffs: grid must be 1-D (use iffsn)");
  return iffsn(coeffs);
}

}  // namespace ffskit
